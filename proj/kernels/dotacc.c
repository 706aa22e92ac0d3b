double av[16][16];
double bv[16][16];
double dots[16];
double scale;

void dotacc(void) {
    int r, t;
    double acc;
    #pragma acc parallel
    {
        #pragma acc loop gang
        for (r = 0; r < 16; r++) {
            acc = 0.0;
            for (t = 0; t < 16; t++) {
                acc = acc + av[r][t] * bv[r][t];
            }
            dots[r] = acc * scale;
        }
    }
}
