double field[16][16];
double out[16][16];
double wsum;

void smooth(void) {
    int g, c;
    #pragma acc kernels
    #pragma acc loop gang
    for (g = 1; g < 15; g++) {
        #pragma acc loop vector
        for (c = 1; c < 15; c++) {
            out[g][c] = field[g][c] * 4.0 + field[g][c] + field[g][c] * 0.25;
            wsum = field[g][c] + wsum * 0.5;
        }
    }
}
