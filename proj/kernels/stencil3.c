double u[32];
double flux_lo[32];
double flux_hi[32];
double alpha;

void stencil3(void) {
    int i;
    #pragma acc parallel
    {
        #pragma acc loop gang
        for (i = 1; i < 31; i++) {
            flux_lo[i] = (u[i] - u[i - 1]) * alpha;
            flux_hi[i] = (u[i + 1] - u[i]) * alpha;
        }
    }
}
