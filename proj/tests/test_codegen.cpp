#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "satcc/codegen.hpp"
#include "satcc/extract.hpp"
#include "satcc/interp.hpp"
#include "satcc/parser.hpp"
#include "satcc/printer.hpp"
#include "satcc/rules.hpp"
#include "satcc/ssa.hpp"
#include "test_util.hpp"

using namespace satcc;

namespace {

// Full pipeline up to an emit plan, on region 0 of a module. The module must
// stay alive as long as the program (defs point into the AST).
struct Fix {
    KernelModule mod;
    std::vector<Region> regions;
    SsaProgram prog;
    SsaGraph sg;
    Extraction x;
    EmitPlan plan;
    SaturationReport sat_report;

    explicit Fix(const std::string& src, bool sat = false, bool bulk = false) {
        mod = parse(src, "<test>");
        regions = find_regions(mod);
        REQUIRE(!regions.empty());
        prog = build_ssa(regions[0], module_symbols(mod, *regions[0].fn));
        sg = from_ssa(prog);
        if (sat) sat_report = saturate(sg.g, default_rules());
        x = extract_greedy(sg.g, sg.roots, CostModel{});
        plan = plan_temporaries(x, sg, prog);
        if (bulk) bulk_load_reorder(plan, x, sg, prog);
    }

    std::string emitted() {
        std::vector<std::pair<Stmt*, StmtPtr>> bodies;
        bodies.emplace_back(regions[0].anchor, build_region_body(prog, plan));
        return emit_module(mod, std::move(bodies));
    }

    const TempDef& temp_for(const std::string& base) {  // the load temp on `base`
        for (const TempDef& td : plan.temp_defs) {
            if (!td.is_load) continue;
            if (td.rhs->kind == ExprKind::ArrayRef && td.rhs->name == base) return td;
        }
        REQUIRE(false);
        static TempDef dummy;
        return dummy;
    }
};

std::string wrap(const std::string& globals, const std::string& body) {
    return globals +
           "\nvoid f(void) {\n"
           "#pragma acc loop gang\n"
           "for (int g0 = 0; g0 < 1; g0++) {\n" +
           body + "\n}\n}\n";
}

// Post-states agree on every name the reference run knows (the optimized run
// adds _v* temps, which don't count). rel == 0 demands bitwise equality.
void check_state(const Environment& want, const Environment& got, double rel) {
    for (auto& [n, v] : want.scalars) {
        auto it = got.scalars.find(n);
        REQUIRE_MESSAGE(it != got.scalars.end(), "missing scalar ", n);
        CAPTURE(n);
        if (v.type == Ty::Int) {
            CHECK(v.i == it->second.i);
        } else if (rel == 0.0) {
            CHECK(std::memcmp(&v.d, &it->second.d, sizeof(double)) == 0);
        } else {
            double err = std::fabs(v.d - it->second.d);
            CHECK(err <= std::max(rel * std::max(std::fabs(v.d), std::fabs(it->second.d)), 1e-12));
        }
    }
    for (auto& [n, v] : want.arrays) {
        auto it = got.arrays.find(n);
        REQUIRE_MESSAGE(it != got.arrays.end(), "missing array ", n);
        REQUIRE(v.dims == it->second.dims);
        CAPTURE(n);
        for (size_t i = 0; i < v.size(); ++i) {
            if (v.type == Ty::Int) {
                CHECK(v.iv[i] == it->second.iv[i]);
            } else if (rel == 0.0) {
                CHECK(std::memcmp(&v.dv[i], &it->second.dv[i], sizeof(double)) == 0);
            } else {
                double a = v.dv[i], b = it->second.dv[i];
                double err = std::fabs(a - b);
                CHECK(err <= std::max(rel * std::max(std::fabs(a), std::fabs(b)), 1e-12));
            }
        }
    }
}

// Runs reference and emitted regions on the same seeds.
void check_roundtrip(Fix& f, int seeds, double rel) {
    std::string text = f.emitted();
    KernelModule m2 = parse(text, "<emitted>");
    auto r2 = find_regions(m2);
    REQUIRE(r2.size() == f.regions.size());
    for (int s = 1; s <= seeds; ++s) {
        Environment env = random_env(f.prog.symbols, static_cast<uint64_t>(s));
        Environment want = eval_region(*f.regions[0].anchor->body, env);
        Environment got = eval_region(*r2[0].anchor->body, env);
        check_state(want, got, rel);
    }
}

size_t count_occurrences(const std::string& hay, const std::string& needle) {
    size_t n = 0;
    for (size_t at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) n++;
    return n;
}

// Statement list of the first region's loop body after reparsing `text`.
const std::vector<StmtPtr>& reparsed_region_stmts(KernelModule& m2) {
    auto r2 = find_regions(m2);
    REQUIRE(!r2.empty());
    REQUIRE(r2[0].anchor->body->kind == StmtKind::Block);
    return r2[0].anchor->body->stmts;
}

bool reads_array(const Expr& e) {
    if (e.kind == ExprKind::ArrayRef) return true;
    for (auto& k : e.kids)
        if (reads_array(*k)) return true;
    return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// Planning

TEST_CASE("plan: shared subexpression gets one temp at the join of its uses") {
    Fix f(wrap("double a; double b; double c; double y[16]; double z[16];",
               "y[g0] = (a + b) * c;\n"
               "z[g0] = (a + b) * a;"));
    // a+b, (a+b)*c, (a+b)*a
    CHECK(f.plan.temp_defs.size() == 3);
    CHECK(f.plan.rewritten.size() == 2);

    int adds = 0;
    for (const TempDef& td : f.plan.temp_defs) {
        CHECK(td.block == 0);
        if (td.rhs->kind == ExprKind::Binary && td.rhs->bin == BinOp::Add) {
            adds++;
            CHECK(td.slot == 0);  // dominates both consumers
            CHECK(td.type == Ty::Double);
        }
    }
    CHECK(adds == 1);
    // One Mul lands at each store.
    CHECK(f.plan.temp_defs[0].slot == 0);
    CHECK(f.plan.temp_defs[1].slot == 0);
    CHECK(f.plan.temp_defs[2].slot == 1);
}

TEST_CASE("plan: constant and variable right-hand sides need no temps") {
    Fix f(wrap("double a; double x; double y;", "x = 5.0;\ny = a;"));
    CHECK(f.plan.temp_defs.empty());
    CHECK(f.plan.rewritten.size() == 2);
    std::string text = f.emitted();
    CHECK(text.find("x = 5.0;") != std::string::npos);
    CHECK(text.find("y = a;") != std::string::npos);
    CHECK(text.find("_v") == std::string::npos);
}

TEST_CASE("plan: temp types follow class types") {
    Fix f(wrap("double y[8]; int i; double z;", "z = y[i - 1] * 2.0;"), false, false);
    std::string text = f.emitted();
    CHECK(text.find("int _v") != std::string::npos);     // i - 1
    CHECK(text.find("double _v") != std::string::npos);  // the load and the product
}

// ---------------------------------------------------------------------------
// Emission shape

TEST_CASE("emit: depth-one temps, telescoped groups, rewritten stores") {
    Fix f(wrap("double a; double b; double c; double y[16]; double z[16];",
               "y[g0] = (a + b) * c;\n"
               "z[g0] = (a + b) * a;"));
    std::string text = f.emitted();

    CHECK(count_occurrences(text, "a + b") == 1);  // computed once
    CHECK(text.find("* c;") != std::string::npos);
    CHECK(text.find("y[g0] = _v") != std::string::npos);
    CHECK(text.find("z[g0] = _v") != std::string::npos);

    KernelModule m2 = parse(text, "<emitted>");
    const auto& body = reparsed_region_stmts(m2);
    // decl, add, mul, y-store, then a nested block for the second group
    REQUIRE(body.size() == 5);
    CHECK(body[0]->kind == StmtKind::Decl);
    CHECK(body[0]->decls.size() == 2);
    CHECK(body[1]->kind == StmtKind::Assign);
    CHECK(body[2]->kind == StmtKind::Assign);
    CHECK(body[3]->kind == StmtKind::Assign);
    CHECK(body[3]->lhs->kind == ExprKind::ArrayRef);
    REQUIRE(body[4]->kind == StmtKind::Block);
    const auto& inner = body[4]->stmts;
    REQUIRE(inner.size() == 3);
    CHECK(inner[0]->kind == StmtKind::Decl);
    CHECK(inner[2]->lhs->name == "z");

    check_roundtrip(f, 5, 0.0);
}

TEST_CASE("emit: store subscripts verbatim and store order preserved") {
    Fix f(wrap("double c[16][16]; double x; int i; int j;",
               "c[i + 1][j] = x * 2.0;\n"
               "c[i][j] = x * 2.0;"));
    std::string text = f.emitted();
    size_t first = text.find("c[i + 1][j] =");
    size_t second = text.find("c[i][j] =");
    REQUIRE(first != std::string::npos);
    REQUIRE(second != std::string::npos);
    CHECK(first < second);
    CHECK(count_occurrences(text, "x * 2.0") == 1);  // shared product
    check_roundtrip(f, 5, 0.0);
}

TEST_CASE("emit: dead scalar writebacks are kept") {
    Fix f(wrap("double a[4]; double b[4]; double c[4]; double t;",
               "t = a[0] * b[0];\n"
               "c[0] = t * t;"));
    std::string text = f.emitted();
    CHECK(text.find("t = _v") != std::string::npos);
    CHECK(text.find("c[0] = _v") != std::string::npos);
    check_roundtrip(f, 5, 0.0);
}

TEST_CASE("emit: declaration initializers are rewritten in place") {
    Fix f(wrap("double a; double b; double q[4];",
               "double t2 = a * b;\n"
               "q[0] = t2 + a * b;"));
    std::string text = f.emitted();
    CHECK(text.find("double t2 = _v") != std::string::npos);
    CHECK(count_occurrences(text, "a * b") == 1);
    check_roundtrip(f, 5, 0.0);
}

TEST_CASE("emit: if branches get braces for temps; loads stay inside branches") {
    Fix f(wrap("double a[4]; double p; double q; double y; double b[4];",
               "if (p < q) { y = a[0] + a[0]; } else y = 3.0;\n"
               "b[0] = y;"),
          false, true);
    // The load's group is inside the then-branch even under bulk motion.
    const TempDef& ld = f.temp_for("a");
    CHECK(ld.block != 0);

    std::string text = f.emitted();
    KernelModule m2 = parse(text, "<emitted>");
    const auto& body = reparsed_region_stmts(m2);
    REQUIRE(body[0]->kind == StmtKind::If);
    REQUIRE(body[0]->then_s->kind == StmtKind::Block);
    CHECK(body[0]->then_s->stmts.size() == 4);  // decl, load, add, y
    CHECK(body[0]->else_s->kind == StmtKind::Assign);

    for (int s = 1; s <= 10; ++s) {
        Environment env = random_env(f.prog.symbols, static_cast<uint64_t>(s));
        env.scalars["p"] = Scalar::of_double(s % 2 ? -1.0 : 1.0);
        env.scalars["q"] = Scalar::of_double(0.0);
        Environment want = eval_region(*f.regions[0].anchor->body, env);
        auto r2 = find_regions(m2);
        Environment got = eval_region(*r2[0].anchor->body, env);
        check_state(want, got, 0.0);
    }
}

TEST_CASE("emit: pragmas survive byte-for-byte, module restored afterwards") {
    std::string src = wrap("double a[4]; double s; int n;",
                           "s = 0.0;\n"
                           "#pragma acc loop seq\n"
                           "for (int l = 0; l < 4; l++) {\n"
                           "s = s + a[l];\n"
                           "}");
    Fix f(src, false, true);
    std::string before = print_module(f.mod);
    std::string text = f.emitted();
    CHECK(print_module(f.mod) == before);  // anchor body swapped back

    auto want = testutil::extract_pragma_lines(src);
    auto got = testutil::extract_pragma_lines(text);
    CHECK(want == got);
    check_roundtrip(f, 5, 0.0);
}

TEST_CASE("emit: module without temps or regions prints byte-identically") {
    std::string src =
        "double g;\n"
        "\n"
        "void f(double a) {\n"
        "    g = a + 1.0;\n"
        "}\n";
    KernelModule m = parse(src, "<test>");
    CHECK(find_regions(m).empty());
    CHECK(emit_module(m, {}) == print_module(m));
    CHECK(emit_module(m, {}) == src);
}

// ---------------------------------------------------------------------------
// Bulk load motion

TEST_CASE("bulk: loads move to the region top when nothing blocks them") {
    Fix f(wrap("double a[4]; double b[4]; double y; double z;",
               "y = 2.0 * b[1];\n"
               "z = y + a[2];"),
          false, true);
    for (const TempDef& td : f.plan.temp_defs)
        if (td.is_load) {
            CHECK(td.block == 0);
            CHECK(td.slot == 0);
        }
    std::string text = f.emitted();
    size_t load_a = text.find("= a[2];");
    size_t load_b = text.find("= b[1];");
    size_t first_stmt = text.find("y = ");
    REQUIRE(load_a != std::string::npos);
    REQUIRE(load_b != std::string::npos);
    CHECK(load_a < first_stmt);
    CHECK(load_b < first_stmt);
    CHECK(load_a < load_b);  // sorted by base
    check_roundtrip(f, 5, 0.0);
}

TEST_CASE("bulk: without the pass, loads sit at their first use") {
    Fix f(wrap("double a[4]; double b[4]; double y; double z;",
               "y = 2.0 * b[1];\n"
               "z = y + a[2];"),
          false, false);
    const TempDef& la = f.temp_for("a");
    CHECK(la.slot == 1);
    const TempDef& lb = f.temp_for("b");
    CHECK(lb.slot == 0);
    check_roundtrip(f, 5, 0.0);
}

TEST_CASE("bulk: an aliasing store is a barrier") {
    // Distinct subscript spellings, so the read is a real load (no
    // store-to-load forwarding) that may still collide with the store.
    Fix f(wrap("double a[16]; double b[16]; double x; double y; int i; int j;",
               "a[i] = x + 1.0;\n"
               "y = a[j] * 2.0;\n"
               "b[0] = y;"),
          false, true);
    const TempDef& ld = f.temp_for("a");
    CHECK(ld.block == 0);
    CHECK(ld.slot == 1);  // just past the store
    std::string text = f.emitted();
    size_t store = text.find("a[i] = ");
    size_t load = text.find("= a[j];");
    REQUIRE(store != std::string::npos);
    REQUIRE(load != std::string::npos);
    CHECK(store < load);
    check_roundtrip(f, 5, 0.0);
}

TEST_CASE("bulk: provably distinct constant subscripts pass a store") {
    Fix f(wrap("double a[4]; double x; double y;",
               "a[0] = x;\n"
               "y = a[1] + x;"),
          false, true);
    const TempDef& ld = f.temp_for("a");
    CHECK(ld.block == 0);
    CHECK(ld.slot == 0);
    std::string text = f.emitted();
    CHECK(text.find("= a[1];") < text.find("a[0] = "));
    check_roundtrip(f, 5, 0.0);
}

TEST_CASE("bulk: loop-dependent loads stay in the loop, invariant ones leave") {
    Fix f(wrap("double c[16]; double d[16]; double q[16]; double s; int n;",
               "s = 0.0;\n"
               "for (int l = 0; l < 4; l++) {\n"
               "s = s + c[l] * d[g0];\n"
               "}\n"
               "q[g0] = s;"),
          false, true);
    const TempDef& lc = f.temp_for("c");
    CHECK(lc.block != 0);  // pinned by the l-phi in its subscript
    CHECK(lc.slot == 0);   // but hoisted to the top of the loop body
    const TempDef& ldv = f.temp_for("d");
    CHECK(ldv.block == 0);
    CHECK(ldv.slot == 0);

    std::string text = f.emitted();
    size_t d_load = text.find("= d[g0];");
    size_t for_hdr = text.find("for (int l");
    size_t c_load = text.find("= c[l];");
    REQUIRE(d_load != std::string::npos);
    REQUIRE(c_load != std::string::npos);
    CHECK(d_load < for_hdr);
    CHECK(for_hdr < c_load);
    check_roundtrip(f, 5, 0.0);
}

TEST_CASE("bulk: a loop that stores the base blocks hoisting past it") {
    Fix f(wrap("double c[4]; double y;",
               "for (int l = 0; l < 4; l++) {\n"
               "c[l] = c[l] + 1.0;\n"
               "}\n"
               "y = c[0] + 1.0;"),
          false, true);
    const TempDef& ld = f.temp_for("c");  // the c[0] read comes first in plan order?
    // Both loads exist: c[l] inside the loop, c[0] after it. Identify by shape.
    const TempDef* after = nullptr;
    const TempDef* inside = nullptr;
    for (const TempDef& td : f.plan.temp_defs) {
        if (!td.is_load) continue;
        if (td.rhs->kids[0]->kind == ExprKind::IntConst)
            after = &td;
        else
            inside = &td;
    }
    (void)ld;
    REQUIRE(after != nullptr);
    REQUIRE(inside != nullptr);
    CHECK(after->block == 0);
    CHECK(after->slot == 1);  // stays behind the loop
    CHECK(inside->block != 0);
    CHECK(inside->slot == 0);
    check_roundtrip(f, 5, 0.0);
}

TEST_CASE("bulk: same-slot loads sort by base, numeric subscripts numerically") {
    Fix f(wrap("double a[16]; double b[16]; double c[16]; double y;",
               "y = b[10] + b[2] + a[5] + c[g0] + b[g0];"),
          false, true);
    std::vector<std::string> order;
    for (const TempDef& td : f.plan.temp_defs)
        if (td.is_load) order.push_back(print_expr(*td.rhs));
    REQUIRE(order.size() == 5);
    CHECK(order[0] == "a[5]");
    CHECK(order[1] == "b[2]");
    CHECK(order[2] == "b[10]");  // numeric, not lexicographic
    CHECK(order[3] == "b[g0]");  // literals ahead of symbolic
    CHECK(order[4] == "c[g0]");
    check_roundtrip(f, 3, 0.0);
}

TEST_CASE("bulk: identical loads collapse to one temp") {
    Fix f(wrap("double a[16]; double y; double z; int i;",
               "y = a[i] + a[i];\n"
               "z = a[i] * 2.0;"),
          false, true);
    int loads = 0;
    for (const TempDef& td : f.plan.temp_defs)
        if (td.is_load) loads++;
    CHECK(loads == 1);
    CHECK(count_occurrences(f.emitted(), "a[i]") == 1);
    check_roundtrip(f, 5, 0.0);
}

TEST_CASE("bulk: subscript temps travel ahead of their loads") {
    Fix f(wrap("double a[8]; double y; double z; int i;",
               "z = 1.0;\n"
               "y = a[i - 1] * 2.0;"),
          false, true);
    // The int temp for i-1 must precede the load, both at the region top.
    const TempDef& ld = f.temp_for("a");
    CHECK(ld.block == 0);
    CHECK(ld.slot == 0);
    bool seen_idx = false;
    for (const TempDef& td : f.plan.temp_defs) {
        if (td.type == Ty::Int && !td.is_load) {
            seen_idx = true;
            CHECK(td.slot == 0);
        }
        if (td.is_load) CHECK(seen_idx);  // index temp emitted first
    }
    CHECK(seen_idx);
    std::string text = f.emitted();
    size_t idx = text.find("= i - 1;");
    size_t load = text.find("= a[_v");
    REQUIRE(idx != std::string::npos);
    REQUIRE(load != std::string::npos);
    CHECK(idx < load);
    check_roundtrip(f, 5, 0.0);
}

TEST_CASE("bulk: a load feeding another load's subscript is placed first") {
    // b[j] may collide with the b[0] store, so it stays behind it; a[b[j]]
    // has no barrier of its own but must still trail the load it indexes by.
    Fix f(wrap("int b[16]; double a[16]; double y; double x; int i; int j;",
               "b[0] = i + 1;\n"
               "y = a[b[j]] + x;"),
          false, true);
    const TempDef* inner = nullptr;
    const TempDef* outer = nullptr;
    for (const TempDef& td : f.plan.temp_defs) {
        if (!td.is_load) continue;
        if (td.rhs->name == "b") inner = &td;
        if (td.rhs->name == "a") outer = &td;
    }
    REQUIRE(inner != nullptr);
    REQUIRE(outer != nullptr);
    CHECK(inner->slot == 1);
    CHECK(outer->slot == 1);
    std::string text = f.emitted();
    CHECK(text.find("= b[j];") < text.find("= a[_v"));
    check_roundtrip(f, 5, 0.0);
}

// ---------------------------------------------------------------------------
// Whole-kernel round trips

TEST_CASE("matmul: unsaturated round trip is bit-identical") {
    Fix f(testutil::read_file(testutil::kernel_path("matmul.c")), false, true);
    check_roundtrip(f, 10, 0.0);
}

TEST_CASE("matmul: saturated extraction emits the fused form and stays exact") {
    Fix f(testutil::read_file(testutil::kernel_path("matmul.c")), true, true);
    int fmas = 0;
    for (auto& [c, n] : f.x.choice)
        if (n.op == Op::Fma) fmas++;
    CHECK(fmas >= 1);
    // a + b * c contraction: same two roundings as the source add/mul pair.
    check_roundtrip(f, 10, 0.0);
}

TEST_CASE("zsolve: every load lands ahead of the first statement") {
    Fix f(testutil::read_file(testutil::kernel_path("zsolve.c")), false, true);

    size_t n_loads = 0;
    for (const TempDef& td : f.plan.temp_defs)
        if (td.is_load) {
            CHECK(td.block == 0);
            CHECK(td.slot == 0);
            n_loads++;
        }
    CHECK(n_loads >= 100);  // the kernel reads a lot of distinct cells

    std::string text = f.emitted();
    KernelModule m2 = parse(text, "<emitted>");
    const auto& body = reparsed_region_stmts(m2);

    // After the leading declarations: subscript temps, then every load,
    // then everything else. No array read may follow the first store.
    bool past_loads = false;
    size_t seen_loads = 0;
    for (const auto& st : body) {
        if (st->kind == StmtKind::Decl) continue;
        if (st->kind == StmtKind::Block) break;  // telescoped remainder holds stores only
        REQUIRE(st->kind == StmtKind::Assign);
        bool is_load_assign = st->rhs->kind == ExprKind::ArrayRef;
        if (is_load_assign) {
            CHECK(!past_loads);
            seen_loads++;
        } else if (st->lhs->kind == ExprKind::Var && st->lhs->name.rfind("_v", 0) == 0) {
            // subscript temp; may appear among the leading group
            CHECK(!past_loads);
        } else {
            past_loads = true;  // first original statement
            CHECK(!reads_array(*st->rhs));
        }
        if (st->lhs->kind == ExprKind::ArrayRef) FAIL("store before the load block ended");
    }
    CHECK(seen_loads == n_loads);
    check_roundtrip(f, 3, 0.0);
}

TEST_CASE("zsolve: store order is untouched and pragmas are intact") {
    std::string src = testutil::read_file(testutil::kernel_path("zsolve.c"));
    Fix f(src, false, true);
    std::string text = f.emitted();

    auto store_sequence = [](KernelModule& m) {
        std::vector<std::string> seq;
        auto regions = find_regions(m);
        std::function<void(const Stmt&)> walk = [&](const Stmt& s) {
            if (s.kind == StmtKind::Assign && s.lhs->kind == ExprKind::ArrayRef)
                seq.push_back(print_expr(*s.lhs));
            if (s.then_s) walk(*s.then_s);
            if (s.else_s) walk(*s.else_s);
            if (s.body) walk(*s.body);
            for (auto& c : s.stmts) walk(*c);
        };
        walk(*regions[0].anchor->body);
        return seq;
    };

    KernelModule m1 = parse(src, "<orig>");
    KernelModule m2 = parse(text, "<emitted>");
    auto s1 = store_sequence(m1);
    auto s2 = store_sequence(m2);
    CHECK(s1 == s2);
    CHECK(!s1.empty());

    CHECK(testutil::extract_pragma_lines(src) == testutil::extract_pragma_lines(text));
}

TEST_CASE("zsolve: saturated pipeline stays within float tolerance") {
    Fix f(testutil::read_file(testutil::kernel_path("zsolve.c")), true, true);
    CHECK(f.sat_report.stop_reason == StopReason::Saturated);
    check_roundtrip(f, 3, 1e-9);
}

TEST_CASE("emission is deterministic") {
    auto run = [] {
        Fix f(testutil::read_file(testutil::kernel_path("zsolve.c")), false, true);
        std::vector<std::string> names;
        for (const TempDef& td : f.plan.temp_defs) names.push_back(td.name);
        return std::pair(names, f.emitted());
    };
    auto a = run();
    auto b = run();
    CHECK(a.first == b.first);
    CHECK(a.second == b.second);
}
