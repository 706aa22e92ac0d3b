double w[16];
double bias;

void fold(void) {
    int i;
    #pragma acc kernels
    #pragma acc loop gang
    for (i = 0; i < 16; i++) {
        w[i] = w[i] * (2.0 * 4.0) + (3.0 - 2.0) * bias + (6.0 - 6.0);
    }
}
