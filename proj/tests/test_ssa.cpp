#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <set>

#include "satcc/parser.hpp"
#include "satcc/ssa.hpp"
#include "test_util.hpp"

using namespace satcc;

namespace {

// Parses a module, locates region `idx`, and converts it. The module must
// outlive the program (defs keep pointers into the AST).
struct Fix {
    KernelModule mod;
    std::vector<Region> regions;
    SsaProgram prog;

    explicit Fix(const std::string& src, size_t idx = 0) {
        mod = parse(src, "<test>");
        regions = find_regions(mod);
        REQUIRE(regions.size() > idx);
        prog = build_ssa(regions[idx], module_symbols(mod, *regions[idx].fn));
    }
};

// Wraps a body snippet in a single-trip marked loop so it forms a region.
std::string wrap(const std::string& globals, const std::string& body) {
    return globals +
           "\nvoid f(void) {\n"
           "#pragma acc loop gang\n"
           "for (int g0 = 0; g0 < 1; g0++) {\n" +
           body + "\n}\n}\n";
}

bool scalar_bits_equal(const Scalar& a, const Scalar& b) {
    if (a.type != b.type) return false;
    if (a.type == Ty::Int) return a.i == b.i;
    return std::memcmp(&a.d, &b.d, sizeof(double)) == 0;
}

bool envs_bitwise_equal(const Environment& a, const Environment& b) {
    if (a.scalars.size() != b.scalars.size() || a.arrays.size() != b.arrays.size()) return false;
    for (auto& [n, v] : a.scalars) {
        auto it = b.scalars.find(n);
        if (it == b.scalars.end() || !scalar_bits_equal(v, it->second)) return false;
    }
    for (auto& [n, v] : a.arrays) {
        auto it = b.arrays.find(n);
        if (it == b.arrays.end()) return false;
        const ArrayBuf& w = it->second;
        if (v.type != w.type || v.dims != w.dims) return false;
        if (v.type == Ty::Int) {
            if (v.iv != w.iv) return false;
        } else if (std::memcmp(v.dv.data(), w.dv.data(), v.dv.size() * sizeof(double)) != 0) {
            return false;
        }
    }
    return true;
}

void check_fidelity(const std::string& src, unsigned n_seeds = 10) {
    KernelModule mod = parse(src, "<test>");
    auto regions = find_regions(mod);
    REQUIRE(!regions.empty());
    for (auto& r : regions) {
        SsaProgram prog = build_ssa(r, module_symbols(mod, *r.fn));
        for (unsigned seed = 1; seed <= n_seeds; seed++) {
            Environment env = random_env(prog.symbols, seed);
            Environment want = eval_region(*r.anchor->body, env);
            Environment got = eval_ssa(prog, env);
            CAPTURE(seed);
            CHECK(envs_bitwise_equal(want, got));
        }
    }
}

void collect_refs(const SsaExpr& e, std::vector<int>& out) {
    if (e.kind == SsaKind::Ref) out.push_back(e.ref);
    for (auto& k : e.kids) collect_refs(*k, out);
}

}  // namespace

TEST_CASE("straight-line renaming gives one id per assignment") {
    Fix f(wrap("int x;", "x = 1; x = x + 2;"));
    REQUIRE(f.prog.defs.size() == 2);
    CHECK(f.prog.defs[0].kind == DefKind::Assign);
    CHECK(render_ssa_expr(*f.prog.defs[0].value) == "1");
    CHECK(render_ssa_expr(*f.prog.defs[1].value) == "(v0 + 2)");
    CHECK(f.prog.dump() == "v0 := 1 [s0]\nv1 := (v0 + 2) [s0]\n");

    CHECK(reaching_def(f.prog, "x", -1) == free_of("x"));
    CHECK(reaching_def(f.prog, "x", 0) == ref_of(0));
    CHECK(reaching_def(f.prog, "x", 1) == ref_of(1));
}

TEST_CASE("if produces a phi with the concrete condition") {
    Fix f(wrap("int c, x, a, b, y;", "if (c) x = a; else x = b;\ny = x;"));
    REQUIRE(f.prog.defs.size() == 4);
    const SsaDef& phi = f.prog.defs[2];
    CHECK(phi.kind == DefKind::IfPhi);
    CHECK(phi.target == "x");
    CHECK(render_ssa_expr(*phi.cond) == "c");
    CHECK(phi.phi_a == ref_of(0));
    CHECK(phi.phi_b == ref_of(1));
    CHECK(render_ssa_expr(*f.prog.defs[3].value) == "v2");
    CHECK(reaching_def(f.prog, "x", 2) == ref_of(2));

    // Branch statements live in their own scopes; the phi in the parent.
    CHECK(f.prog.scopes[f.prog.defs[0].scope].kind == ScopeInfo::Kind::IfBranch);
    CHECK(f.prog.scopes[f.prog.defs[1].scope].kind == ScopeInfo::Kind::IfBranch);
    CHECK(f.prog.defs[0].scope != f.prog.defs[1].scope);
    CHECK(phi.scope == 0);
}

TEST_CASE("one-sided if merges against the fallthrough value") {
    Fix f(wrap("int c, x;", "x = 5;\nif (c) { x = 1; }\nc = x;"));
    // v0 x=5, v1 x=1 (then), v2 = phi(c, v1, v0), v3 c=x.
    REQUIRE(f.prog.defs.size() == 4);
    const SsaDef& phi = f.prog.defs[2];
    CHECK(phi.kind == DefKind::IfPhi);
    CHECK(phi.phi_a == ref_of(1));
    CHECK(phi.phi_b == ref_of(0));
}

TEST_CASE("untouched names get no phi") {
    Fix f(wrap("int c, x, y;", "x = 1;\nif (c) { y = 2; } else { y = 3; }\nc = x + y;"));
    int n_phis = 0;
    for (auto& d : f.prog.defs)
        if (d.kind == DefKind::IfPhi) n_phis++;
    CHECK(n_phis == 1);  // only y merges
}

TEST_CASE("store alias rule: same base unless constant positions differ") {
    auto idx = [](std::vector<const char*> texts) {
        std::vector<SsaExprPtr> out;
        for (auto* t : texts) {
            auto e = std::make_unique<SsaExpr>();
            if (t[0] >= '0' && t[0] <= '9') {
                e->kind = SsaKind::IntConst;
                e->ival = std::atoll(t);
                e->type = Ty::Int;
            } else {
                e->kind = SsaKind::FreeVar;
                e->name = t;
                e->type = Ty::Int;
            }
            out.push_back(std::move(e));
        }
        return out;
    };
    CHECK_FALSE(store_may_alias("lhsZ", idx({"0", "0", "0", "k", "i", "j"}), "njacZ",
                                idx({"0", "0", "k", "i", "j"})));
    CHECK(store_may_alias("a", idx({"i"}), "a", idx({"j"})));
    CHECK_FALSE(store_may_alias("a", idx({"0"}), "a", idx({"1"})));
    CHECK(store_may_alias("a", idx({"0"}), "a", idx({"0"})));
    // One differing constant position is enough, even with unknowns elsewhere.
    CHECK_FALSE(store_may_alias("a", idx({"i", "0"}), "a", idx({"j", "1"})));
    CHECK(store_may_alias("a", idx({"i", "0"}), "a", idx({"j", "0"})));
}

TEST_CASE("identical loads share an epoch; stores advance it") {
    Fix f(wrap("double a[8]; double t, u; int i, j;", "t = a[i] * 2.0;\nu = a[i] * 3.0;"));
    CHECK(render_ssa_expr(*f.prog.defs[0].value) == "(a#0[i] * 2.0)");
    CHECK(render_ssa_expr(*f.prog.defs[1].value) == "(a#0[i] * 3.0)");

    Fix g(wrap("double a[8]; double t, u; int i, j;", "t = a[i];\na[j] = t + 1.0;\nu = a[i];"));
    CHECK(render_ssa_expr(*g.prog.defs[0].value) == "a#0[i]");
    CHECK(render_ssa_expr(*g.prog.defs[2].value) == "a#1[i]");
}

TEST_CASE("epoch counting skips stores to provably different elements") {
    Fix f(wrap("double a[8]; double x, y, z, w; int i;",
               "x = a[5];\n"
               "a[5] = x + 1.0;\n"
               "y = a[5];\n"
               "z = a[6];\n"
               "w = a[i];"));
    CHECK(render_ssa_expr(*f.prog.defs[0].value) == "a#0[5]");
    CHECK(f.prog.defs[1].kind == DefKind::Store);
    CHECK(render_ssa_expr(*f.prog.defs[2].value) == "v1");   // forwarded
    CHECK(render_ssa_expr(*f.prog.defs[3].value) == "a#0[6]");  // [5] vs [6]: disjoint
    CHECK(render_ssa_expr(*f.prog.defs[4].value) == "a#1[i]");  // may alias the store
}

TEST_CASE("store-to-load forwarding requires the same scope") {
    // Same scope: the load is the stored value.
    Fix f(wrap("double a[8]; double x, y, z; int i;", "a[i] = x + y;\nz = a[i];"));
    REQUIRE(f.prog.defs.size() == 2);
    CHECK(render_ssa_expr(*f.prog.defs[1].value) == "v0");

    // A store under a condition must not feed an unconditional load.
    Fix g(wrap("double a[8]; double c, x, z; int i;", "if (c) { a[i] = x; }\nz = a[i];"));
    const SsaDef& zd = g.prog.defs.back();
    CHECK(zd.value->kind == SsaKind::Load);
    CHECK(zd.value->epoch == 2);  // branch store + merge kill

    // Kill events invalidate the whole base, even provably different elements.
    Fix h(wrap("double a[8]; double c, x, q; int i;", "if (c) { a[3] = x; }\nq = a[7];"));
    CHECK(render_ssa_expr(*h.prog.defs.back().value) == "a#1[7]");
}

TEST_CASE("forwarding needs the identical resolved index, not the same text") {
    Fix f(wrap("double a[8]; double x, z; int i;",
               "a[i] = x;\n"
               "i = i + 1;\n"
               "z = a[i];"));
    const SsaDef& zd = f.prog.defs.back();
    CHECK(zd.value->kind == SsaKind::Load);  // index refers to the new i
    CHECK(render_ssa_expr(*zd.value) == "a#1[v1]");
}

TEST_CASE("for loops build entry phis, carried values, and exit values") {
    std::string src = testutil::read_file(testutil::kernel_path("matmul.c"));
    Fix f(src);
    CHECK(f.prog.dump() ==
          "v0 := 0.0 [s0]\n"
          "v1 := 0 [s0]\n"
          "v2 := phi(loop#0 l, init=v1, carried=v5) [s0]\n"
          "v3 := phi(loop#0 sum, init=v0, carried=v4) [s0]\n"
          "v4 := (v3 + (A#0[i][v2] * B#0[v2][j])) [s1]\n"
          "v5 := (v2 + 1) [s1]\n"
          "v6 := exit(loop#0 l) [s0]\n"
          "v7 := exit(loop#0 sum) [s0]\n"
          "v8 := C[i][j] <- v7 [s0]\n");

    CHECK(f.prog.scopes.size() == 2);
    CHECK(f.prog.scopes[1].kind == ScopeInfo::Kind::ForBody);
    CHECK(f.prog.scopes[1].parent == 0);
    CHECK(f.prog.scopes[1].loop_id == 0);

    // Inside the body the loop-carried scalar resolves to its phi.
    CHECK(reaching_def(f.prog, "sum", 3) == ref_of(3));
    CHECK(reaching_def(f.prog, "sum", 4) == ref_of(4));
    CHECK(reaching_def(f.prog, "sum", 7) == ref_of(7));
    CHECK(reaching_def(f.prog, "i", 8) == free_of("i"));
}

TEST_CASE("stores inside a loop kill reuse across the loop boundary") {
    Fix f(wrap("double a[12]; double q, r, x; int n, i;",
               "q = a[0];\n"
               "for (i = 0; i < n; i = i + 1) { a[i] = x; }\n"
               "r = a[0];"));
    CHECK(render_ssa_expr(*f.prog.defs[0].value) == "a#0[0]");
    // Events: entry kill, the store, exit kill → the post-loop load is new.
    const SsaDef& rd = f.prog.defs.back();
    REQUIRE(rd.value->kind == SsaKind::Load);
    CHECK(rd.value->epoch == 3);
}

TEST_CASE("region locals read before definition are flagged free inputs") {
    Fix f(wrap("double y;", "double w;\ny = w + 1.0;"));
    REQUIRE(f.prog.warnings.size() == 1);
    CHECK(f.prog.warnings[0].find("'w'") != std::string::npos);
    CHECK(render_ssa_expr(*f.prog.defs[0].value) == "(w + 1.0)");
}

TEST_CASE("store events keep textual order") {
    std::string src = testutil::read_file(testutil::kernel_path("zsolve.c"));
    Fix f(src);
    REQUIRE(!f.prog.store_events.empty());
    for (size_t k = 0; k < f.prog.store_events.size(); k++) {
        CHECK(f.prog.store_events[k].sequence_no == static_cast<int>(k));
        if (k) CHECK(f.prog.store_events[k].def > f.prog.store_events[k - 1].def);
    }
}

TEST_CASE("block-tridiagonal kernel: 75 stores, 125 distinct loads, all free") {
    std::string src = testutil::read_file(testutil::kernel_path("zsolve.c"));
    Fix f(src);

    int n_stores = 0, n_assigns = 0;
    for (auto& d : f.prog.defs) {
        if (d.kind == DefKind::Store) n_stores++;
        if (d.kind == DefKind::Assign) n_assigns++;
    }
    CHECK(n_stores == 75);
    CHECK(n_assigns == 2);  // temp1, temp2
    CHECK(f.prog.defs.size() == 77);

    std::set<std::string> loads;
    std::function<void(const SsaExpr&)> scan = [&](const SsaExpr& e) {
        if (e.kind == SsaKind::Load) {
            CHECK(e.epoch == 0);  // fjacZ/njacZ are never stored: free inputs
            loads.insert(render_ssa_expr(e));
        }
        for (auto& k : e.kids) scan(*k);
    };
    for (auto& d : f.prog.defs) {
        if (d.value) scan(*d.value);
        for (auto& ix : d.indices) scan(*ix);
    }
    CHECK(loads.size() == 125);
}

TEST_CASE("every reference points to an earlier definition") {
    for (const char* k : {"matmul.c", "zsolve.c"}) {
        Fix f(testutil::read_file(testutil::kernel_path(k)));
        for (auto& d : f.prog.defs) {
            std::vector<int> refs;
            if (d.value) collect_refs(*d.value, refs);
            if (d.cond) collect_refs(*d.cond, refs);
            for (auto& ix : d.indices) collect_refs(*ix, refs);
            if (d.phi_a.is_def()) refs.push_back(d.phi_a.def);
            for (int r : refs) CHECK(r < d.id);
            // Loop-carried refs (phi_b of a for-phi) may point forward but
            // must stay inside the program.
            if (d.phi_b.is_def()) CHECK(d.phi_b.def < static_cast<int>(f.prog.defs.size()));
        }
    }
}

TEST_CASE("conversion is deterministic") {
    std::string src = testutil::read_file(testutil::kernel_path("zsolve.c"));
    Fix a(src), b(src);
    CHECK(a.prog.dump() == b.prog.dump());
}

TEST_CASE("ssa evaluation matches the ast interpreter bitwise") {
    SUBCASE("matmul region") { check_fidelity(testutil::read_file(testutil::kernel_path("matmul.c"))); }
    SUBCASE("block-tridiagonal region") {
        check_fidelity(testutil::read_file(testutil::kernel_path("zsolve.c")), 3);
    }
    SUBCASE("aliasing and forwarding") {
        check_fidelity(wrap("double a[12]; double x, y; int i, j;",
                            "a[i] = x;\n"
                            "y = a[j];\n"
                            "a[j] = y + 1.0;\n"
                            "x = a[i];\n"
                            "if (x < y) { a[0] = x; } else { a[1] = y; }\n"
                            "x = a[0] + a[1];"));
    }
    SUBCASE("loop-carried conditional sum") {
        check_fidelity(wrap("double s, x; double a[10]; int n;",
                            "s = 0.0;\n"
                            "for (int t = 0; t < n; t = t + 1) {\n"
                            "    if (a[t] > 0.0) { s = s + a[t]; } else { s = s - 1.0; }\n"
                            "}\n"
                            "x = s;"));
    }
    SUBCASE("region-local declarations and int arithmetic") {
        check_fidelity(wrap("int p, q; int b[9];",
                            "int m = p * 2;\n"
                            "double r = 0.5;\n"
                            "m = m % 7 + b[q % 3];\n"
                            "r = r * (m / 2);\n"
                            "q = m;\n"
                            "p = q * q;"));
    }
    SUBCASE("nested loops with inner stores") {
        check_fidelity(wrap("double a[10][10]; double acc; int n, i;",
                            "acc = 0.0;\n"
                            "for (int r = 0; r < n; r = r + 1) {\n"
                            "    for (int c = 0; c < n; c = c + 1) {\n"
                            "        a[r][c] = acc + a[c][r];\n"
                            "        acc = acc + 1.0;\n"
                            "    }\n"
                            "}\n"
                            "a[0][0] = acc;"));
    }
    SUBCASE("calls and unary operators") {
        check_fidelity(wrap("double x, y, z;",
                            "x = sqrt(fabs(y)) + pow(2.0, 3.0);\n"
                            "z = -x * fmax(x, y);\n"
                            "y = !(x > z);"));
    }
}
