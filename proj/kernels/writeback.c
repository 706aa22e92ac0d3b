double buf[16];
double coef, mass;

void scale_pass(void) {
    int i;
    #pragma acc kernels
    #pragma acc loop gang
    for (i = 0; i < 16; i++) {
        coef = coef * 0.5 + buf[i];
        buf[i] = coef * mass;
    }
}

void shift_pass(void) {
    int i;
    #pragma acc kernels
    #pragma acc loop gang
    for (i = 1; i < 15; i++) {
        mass = buf[i - 1] + mass * 0.25;
        buf[i] = mass;
    }
}
