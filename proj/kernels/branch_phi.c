double p[16];
double q[16];
double lim;

void clampmix(void) {
    int i;
    double v;
    #pragma acc parallel
    {
        #pragma acc loop gang
        for (i = 0; i < 16; i++) {
            v = p[i] * 2.0 + q[i];
            if (v > lim) {
                v = lim + (v - lim) * 0.25;
            } else {
                v = v * 1.5 - q[i];
            }
            q[i] = v + p[i];
        }
    }
}
