double fjacZ[5][5][11][10][10];
double njacZ[5][5][11][10][10];
double lhsZ[5][5][3][11][10][10];
double dt, tz1, tz2;
double dz1, dz2, dz3, dz4, dz5;

void z_solve_lhs(void) {
    int k, i, j;
    double temp1, temp2;
    #pragma acc parallel loop gang num_gangs(9) \
                num_workers(4) vector_length(32)
    for (k = 1; k <= 9; k++) {
        #pragma acc loop worker
        for (i = 1; i <= 8; i++) {
            #pragma acc loop vector
            for (j = 1; j <= 8; j++) {
                temp1 = dt * tz1;
                temp2 = dt * tz2;
                lhsZ[0][0][0][k][i][j] = - temp2 * fjacZ[0][0][k - 1][i][j] - temp1 * njacZ[0][0][k - 1][i][j] - temp1 * dz1;
                lhsZ[0][1][0][k][i][j] = - temp2 * fjacZ[0][1][k - 1][i][j] - temp1 * njacZ[0][1][k - 1][i][j];
                lhsZ[0][2][0][k][i][j] = - temp2 * fjacZ[0][2][k - 1][i][j] - temp1 * njacZ[0][2][k - 1][i][j];
                lhsZ[0][3][0][k][i][j] = - temp2 * fjacZ[0][3][k - 1][i][j] - temp1 * njacZ[0][3][k - 1][i][j];
                lhsZ[0][4][0][k][i][j] = - temp2 * fjacZ[0][4][k - 1][i][j] - temp1 * njacZ[0][4][k - 1][i][j];
                lhsZ[1][0][0][k][i][j] = - temp2 * fjacZ[1][0][k - 1][i][j] - temp1 * njacZ[1][0][k - 1][i][j];
                lhsZ[1][1][0][k][i][j] = - temp2 * fjacZ[1][1][k - 1][i][j] - temp1 * njacZ[1][1][k - 1][i][j] - temp1 * dz2;
                lhsZ[1][2][0][k][i][j] = - temp2 * fjacZ[1][2][k - 1][i][j] - temp1 * njacZ[1][2][k - 1][i][j];
                lhsZ[1][3][0][k][i][j] = - temp2 * fjacZ[1][3][k - 1][i][j] - temp1 * njacZ[1][3][k - 1][i][j];
                lhsZ[1][4][0][k][i][j] = - temp2 * fjacZ[1][4][k - 1][i][j] - temp1 * njacZ[1][4][k - 1][i][j];
                lhsZ[2][0][0][k][i][j] = - temp2 * fjacZ[2][0][k - 1][i][j] - temp1 * njacZ[2][0][k - 1][i][j];
                lhsZ[2][1][0][k][i][j] = - temp2 * fjacZ[2][1][k - 1][i][j] - temp1 * njacZ[2][1][k - 1][i][j];
                lhsZ[2][2][0][k][i][j] = - temp2 * fjacZ[2][2][k - 1][i][j] - temp1 * njacZ[2][2][k - 1][i][j] - temp1 * dz3;
                lhsZ[2][3][0][k][i][j] = - temp2 * fjacZ[2][3][k - 1][i][j] - temp1 * njacZ[2][3][k - 1][i][j];
                lhsZ[2][4][0][k][i][j] = - temp2 * fjacZ[2][4][k - 1][i][j] - temp1 * njacZ[2][4][k - 1][i][j];
                lhsZ[3][0][0][k][i][j] = - temp2 * fjacZ[3][0][k - 1][i][j] - temp1 * njacZ[3][0][k - 1][i][j];
                lhsZ[3][1][0][k][i][j] = - temp2 * fjacZ[3][1][k - 1][i][j] - temp1 * njacZ[3][1][k - 1][i][j];
                lhsZ[3][2][0][k][i][j] = - temp2 * fjacZ[3][2][k - 1][i][j] - temp1 * njacZ[3][2][k - 1][i][j];
                lhsZ[3][3][0][k][i][j] = - temp2 * fjacZ[3][3][k - 1][i][j] - temp1 * njacZ[3][3][k - 1][i][j] - temp1 * dz4;
                lhsZ[3][4][0][k][i][j] = - temp2 * fjacZ[3][4][k - 1][i][j] - temp1 * njacZ[3][4][k - 1][i][j];
                lhsZ[4][0][0][k][i][j] = - temp2 * fjacZ[4][0][k - 1][i][j] - temp1 * njacZ[4][0][k - 1][i][j];
                lhsZ[4][1][0][k][i][j] = - temp2 * fjacZ[4][1][k - 1][i][j] - temp1 * njacZ[4][1][k - 1][i][j];
                lhsZ[4][2][0][k][i][j] = - temp2 * fjacZ[4][2][k - 1][i][j] - temp1 * njacZ[4][2][k - 1][i][j];
                lhsZ[4][3][0][k][i][j] = - temp2 * fjacZ[4][3][k - 1][i][j] - temp1 * njacZ[4][3][k - 1][i][j];
                lhsZ[4][4][0][k][i][j] = - temp2 * fjacZ[4][4][k - 1][i][j] - temp1 * njacZ[4][4][k - 1][i][j] - temp1 * dz5;
                lhsZ[0][0][1][k][i][j] = 1.0 + temp1 * 2.0 * njacZ[0][0][k][i][j] + temp1 * 2.0 * dz1;
                lhsZ[0][1][1][k][i][j] = temp1 * 2.0 * njacZ[0][1][k][i][j];
                lhsZ[0][2][1][k][i][j] = temp1 * 2.0 * njacZ[0][2][k][i][j];
                lhsZ[0][3][1][k][i][j] = temp1 * 2.0 * njacZ[0][3][k][i][j];
                lhsZ[0][4][1][k][i][j] = temp1 * 2.0 * njacZ[0][4][k][i][j];
                lhsZ[1][0][1][k][i][j] = temp1 * 2.0 * njacZ[1][0][k][i][j];
                lhsZ[1][1][1][k][i][j] = 1.0 + temp1 * 2.0 * njacZ[1][1][k][i][j] + temp1 * 2.0 * dz2;
                lhsZ[1][2][1][k][i][j] = temp1 * 2.0 * njacZ[1][2][k][i][j];
                lhsZ[1][3][1][k][i][j] = temp1 * 2.0 * njacZ[1][3][k][i][j];
                lhsZ[1][4][1][k][i][j] = temp1 * 2.0 * njacZ[1][4][k][i][j];
                lhsZ[2][0][1][k][i][j] = temp1 * 2.0 * njacZ[2][0][k][i][j];
                lhsZ[2][1][1][k][i][j] = temp1 * 2.0 * njacZ[2][1][k][i][j];
                lhsZ[2][2][1][k][i][j] = 1.0 + temp1 * 2.0 * njacZ[2][2][k][i][j] + temp1 * 2.0 * dz3;
                lhsZ[2][3][1][k][i][j] = temp1 * 2.0 * njacZ[2][3][k][i][j];
                lhsZ[2][4][1][k][i][j] = temp1 * 2.0 * njacZ[2][4][k][i][j];
                lhsZ[3][0][1][k][i][j] = temp1 * 2.0 * njacZ[3][0][k][i][j];
                lhsZ[3][1][1][k][i][j] = temp1 * 2.0 * njacZ[3][1][k][i][j];
                lhsZ[3][2][1][k][i][j] = temp1 * 2.0 * njacZ[3][2][k][i][j];
                lhsZ[3][3][1][k][i][j] = 1.0 + temp1 * 2.0 * njacZ[3][3][k][i][j] + temp1 * 2.0 * dz4;
                lhsZ[3][4][1][k][i][j] = temp1 * 2.0 * njacZ[3][4][k][i][j];
                lhsZ[4][0][1][k][i][j] = temp1 * 2.0 * njacZ[4][0][k][i][j];
                lhsZ[4][1][1][k][i][j] = temp1 * 2.0 * njacZ[4][1][k][i][j];
                lhsZ[4][2][1][k][i][j] = temp1 * 2.0 * njacZ[4][2][k][i][j];
                lhsZ[4][3][1][k][i][j] = temp1 * 2.0 * njacZ[4][3][k][i][j];
                lhsZ[4][4][1][k][i][j] = 1.0 + temp1 * 2.0 * njacZ[4][4][k][i][j] + temp1 * 2.0 * dz5;
                lhsZ[0][0][2][k][i][j] = temp2 * fjacZ[0][0][k + 1][i][j] - temp1 * njacZ[0][0][k + 1][i][j] - temp1 * dz1;
                lhsZ[0][1][2][k][i][j] = temp2 * fjacZ[0][1][k + 1][i][j] - temp1 * njacZ[0][1][k + 1][i][j];
                lhsZ[0][2][2][k][i][j] = temp2 * fjacZ[0][2][k + 1][i][j] - temp1 * njacZ[0][2][k + 1][i][j];
                lhsZ[0][3][2][k][i][j] = temp2 * fjacZ[0][3][k + 1][i][j] - temp1 * njacZ[0][3][k + 1][i][j];
                lhsZ[0][4][2][k][i][j] = temp2 * fjacZ[0][4][k + 1][i][j] - temp1 * njacZ[0][4][k + 1][i][j];
                lhsZ[1][0][2][k][i][j] = temp2 * fjacZ[1][0][k + 1][i][j] - temp1 * njacZ[1][0][k + 1][i][j];
                lhsZ[1][1][2][k][i][j] = temp2 * fjacZ[1][1][k + 1][i][j] - temp1 * njacZ[1][1][k + 1][i][j] - temp1 * dz2;
                lhsZ[1][2][2][k][i][j] = temp2 * fjacZ[1][2][k + 1][i][j] - temp1 * njacZ[1][2][k + 1][i][j];
                lhsZ[1][3][2][k][i][j] = temp2 * fjacZ[1][3][k + 1][i][j] - temp1 * njacZ[1][3][k + 1][i][j];
                lhsZ[1][4][2][k][i][j] = temp2 * fjacZ[1][4][k + 1][i][j] - temp1 * njacZ[1][4][k + 1][i][j];
                lhsZ[2][0][2][k][i][j] = temp2 * fjacZ[2][0][k + 1][i][j] - temp1 * njacZ[2][0][k + 1][i][j];
                lhsZ[2][1][2][k][i][j] = temp2 * fjacZ[2][1][k + 1][i][j] - temp1 * njacZ[2][1][k + 1][i][j];
                lhsZ[2][2][2][k][i][j] = temp2 * fjacZ[2][2][k + 1][i][j] - temp1 * njacZ[2][2][k + 1][i][j] - temp1 * dz3;
                lhsZ[2][3][2][k][i][j] = temp2 * fjacZ[2][3][k + 1][i][j] - temp1 * njacZ[2][3][k + 1][i][j];
                lhsZ[2][4][2][k][i][j] = temp2 * fjacZ[2][4][k + 1][i][j] - temp1 * njacZ[2][4][k + 1][i][j];
                lhsZ[3][0][2][k][i][j] = temp2 * fjacZ[3][0][k + 1][i][j] - temp1 * njacZ[3][0][k + 1][i][j];
                lhsZ[3][1][2][k][i][j] = temp2 * fjacZ[3][1][k + 1][i][j] - temp1 * njacZ[3][1][k + 1][i][j];
                lhsZ[3][2][2][k][i][j] = temp2 * fjacZ[3][2][k + 1][i][j] - temp1 * njacZ[3][2][k + 1][i][j];
                lhsZ[3][3][2][k][i][j] = temp2 * fjacZ[3][3][k + 1][i][j] - temp1 * njacZ[3][3][k + 1][i][j] - temp1 * dz4;
                lhsZ[3][4][2][k][i][j] = temp2 * fjacZ[3][4][k + 1][i][j] - temp1 * njacZ[3][4][k + 1][i][j];
                lhsZ[4][0][2][k][i][j] = temp2 * fjacZ[4][0][k + 1][i][j] - temp1 * njacZ[4][0][k + 1][i][j];
                lhsZ[4][1][2][k][i][j] = temp2 * fjacZ[4][1][k + 1][i][j] - temp1 * njacZ[4][1][k + 1][i][j];
                lhsZ[4][2][2][k][i][j] = temp2 * fjacZ[4][2][k + 1][i][j] - temp1 * njacZ[4][2][k + 1][i][j];
                lhsZ[4][3][2][k][i][j] = temp2 * fjacZ[4][3][k + 1][i][j] - temp1 * njacZ[4][3][k + 1][i][j];
                lhsZ[4][4][2][k][i][j] = temp2 * fjacZ[4][4][k + 1][i][j] - temp1 * njacZ[4][4][k + 1][i][j] - temp1 * dz5;
            }
        }
    }
}
