double A[16][16];
double B[16][16];
double C[16][16];

void matmul(void) {
    int i, j, l;
    double sum;
    #pragma acc kernels
    #pragma acc loop gang
    for (i = 0; i < 16; i++) {
        #pragma acc loop vector
        for (j = 0; j < 16; j++) {
            sum = 0.0;
            for (l = 0; l < 16; l++) {
                sum = sum + A[i][l] * B[l][j];
            }
            C[i][j] = sum;
        }
    }
}
