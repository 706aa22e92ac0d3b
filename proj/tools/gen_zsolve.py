#!/usr/bin/env python3
"""Regenerates kernels/zsolve.c: the block-tridiagonal LHS setup kernel.

The body builds three 5x5 Jacobian blocks per grid point (sub-, main- and
super-diagonal), 75 stores total, reading fjacZ/njacZ at k-1, k and k+1
(125 distinct loads). Diagonal entries add the artificial dissipation
terms dz1..dz5.
"""

import os

DZ = ["dz1", "dz2", "dz3", "dz4", "dz5"]


def sub_block(m, n):
    s = (
        f"lhsZ[{m}][{n}][0][k][i][j] = - temp2 * fjacZ[{m}][{n}][k - 1][i][j]"
        f" - temp1 * njacZ[{m}][{n}][k - 1][i][j]"
    )
    if m == n:
        s += f" - temp1 * {DZ[m]}"
    return s + ";"


def main_block(m, n):
    if m == n:
        return (
            f"lhsZ[{m}][{n}][1][k][i][j] = 1.0 + temp1 * 2.0 * njacZ[{m}][{n}][k][i][j]"
            f" + temp1 * 2.0 * {DZ[m]};"
        )
    return f"lhsZ[{m}][{n}][1][k][i][j] = temp1 * 2.0 * njacZ[{m}][{n}][k][i][j];"


def super_block(m, n):
    s = (
        f"lhsZ[{m}][{n}][2][k][i][j] = temp2 * fjacZ[{m}][{n}][k + 1][i][j]"
        f" - temp1 * njacZ[{m}][{n}][k + 1][i][j]"
    )
    if m == n:
        s += f" - temp1 * {DZ[m]}"
    return s + ";"


def main():
    lines = []
    lines.append("double fjacZ[5][5][11][10][10];")
    lines.append("double njacZ[5][5][11][10][10];")
    lines.append("double lhsZ[5][5][3][11][10][10];")
    lines.append("double dt, tz1, tz2;")
    lines.append("double dz1, dz2, dz3, dz4, dz5;")
    lines.append("")
    lines.append("void z_solve_lhs(void) {")
    lines.append("    int k, i, j;")
    lines.append("    double temp1, temp2;")
    lines.append("    #pragma acc parallel loop gang num_gangs(9) \\")
    lines.append("                num_workers(4) vector_length(32)")
    lines.append("    for (k = 1; k <= 9; k++) {")
    lines.append("        #pragma acc loop worker")
    lines.append("        for (i = 1; i <= 8; i++) {")
    lines.append("            #pragma acc loop vector")
    lines.append("            for (j = 1; j <= 8; j++) {")
    pad = " " * 16
    lines.append(pad + "temp1 = dt * tz1;")
    lines.append(pad + "temp2 = dt * tz2;")
    for block in (sub_block, main_block, super_block):
        for m in range(5):
            for n in range(5):
                lines.append(pad + block(m, n))
    lines.append("            }")
    lines.append("        }")
    lines.append("    }")
    lines.append("}")

    out = os.path.join(os.path.dirname(__file__), "..", "kernels", "zsolve.c")
    with open(out, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"wrote {os.path.normpath(out)}")


if __name__ == "__main__":
    main()
