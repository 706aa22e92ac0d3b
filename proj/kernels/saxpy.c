double xv[16];
double yv[16];
double a;

void saxpy(void) {
    int i;
    #pragma acc kernels
    #pragma acc loop gang
    for (i = 0; i < 16; i++) {
        yv[i] = a * xv[i] + yv[i];
    }
}
