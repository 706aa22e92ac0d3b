double fjacS[5][11][10];
double njacS[5][11][10];
double lhsS[5][3][11][10];
double dt, tz1, tz2;

void z_small(void) {
    int k, i;
    double temp1, temp2;
    #pragma acc parallel loop gang
    for (k = 1; k <= 9; k++) {
        #pragma acc loop vector
        for (i = 1; i <= 8; i++) {
            temp1 = dt * tz1;
            temp2 = dt * tz2;
            lhsS[0][0][k][i] = - temp2 * fjacS[0][k - 1][i] - temp1 * njacS[0][k - 1][i];
            lhsS[1][0][k][i] = - temp2 * fjacS[1][k - 1][i] - temp1 * njacS[1][k - 1][i];
            lhsS[2][0][k][i] = - temp2 * fjacS[2][k - 1][i] - temp1 * njacS[2][k - 1][i];
            lhsS[0][1][k][i] = 1.0 + temp1 * 2.0 * njacS[0][k][i];
            lhsS[1][1][k][i] = 1.0 + temp1 * 2.0 * njacS[1][k][i];
            lhsS[2][1][k][i] = 1.0 + temp1 * 2.0 * njacS[2][k][i];
            lhsS[0][2][k][i] = temp2 * fjacS[0][k + 1][i] - temp1 * njacS[0][k + 1][i];
            lhsS[1][2][k][i] = temp2 * fjacS[1][k + 1][i] - temp1 * njacS[1][k + 1][i];
            lhsS[2][2][k][i] = temp2 * fjacS[2][k + 1][i] - temp1 * njacS[2][k + 1][i];
            lhsS[2][2][k][i] = lhsS[2][2][k][i] + temp1 * 2.0 * njacS[2][k][i];
        }
    }
}
