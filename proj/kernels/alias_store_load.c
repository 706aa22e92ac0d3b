double cell[16][16];
double flux[16][16];

void relax_row(void) {
    int i, j;
    #pragma acc parallel
    {
        #pragma acc loop gang
        for (i = 1; i < 15; i++) {
            #pragma acc loop vector
            for (j = 1; j < 15; j++) {
                cell[i][j] = cell[i][j] * 0.5 + flux[i][j];
                flux[i][j] = cell[i][j - 1] + cell[i][j + 1];
            }
        }
    }
}
