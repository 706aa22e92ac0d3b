double plainbuf[8];

void plain_update(void) {
    int i;
    for (i = 0; i < 8; i++) {
        plainbuf[i] = plainbuf[i] * 0.5;
    }
}
