double vin[16];
double vout[16];
double floor_v, ceil_v;

void clampcall(void) {
    int i;
    #pragma acc parallel
    {
        #pragma acc loop gang
        for (i = 0; i < 16; i++) {
            vout[i] = fmin(fmax(vin[i], floor_v), ceil_v) + sqrt(fabs(vin[i]));
        }
    }
}
