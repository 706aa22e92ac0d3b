double m1[16];
double m2[16];
double m3[16];

void negmix(void) {
    int i;
    #pragma acc kernels
    #pragma acc loop gang
    for (i = 0; i < 16; i++) {
        m3[i] = - m1[i] * m2[i] + m3[i];
        m2[i] = m3[i] - m1[i] * m2[i];
    }
}
