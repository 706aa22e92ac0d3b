double xs[16];
double ys[16];
double zs[16];

void polyeval(void) {
    int i;
    double t;
    #pragma acc parallel
    {
        #pragma acc loop gang
        for (i = 0; i < 16; i++) {
            t = xs[i] + ys[i];
            zs[i] = t * t + (xs[i] + ys[i]) * 2.0;
            ys[i] = t * t - xs[i];
        }
    }
}
