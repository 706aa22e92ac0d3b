double table[16];
double gain[16];
double accum[16];

void seqscan(void) {
    int g, s;
    double a;
    #pragma acc parallel
    {
        #pragma acc loop gang
        for (g = 0; g < 16; g++) {
            a = 0.0;
            for (s = 0; s < 8; s++) {
                a = a + table[s] * gain[g];
            }
            accum[g] = a;
        }
    }
}
