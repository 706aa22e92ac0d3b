#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "satcc/codegen.hpp"
#include "satcc/extract.hpp"
#include "satcc/oracle.hpp"
#include "satcc/parser.hpp"
#include "satcc/rules.hpp"
#include "satcc/ssa.hpp"
#include "test_util.hpp"

using namespace satcc;

namespace {

struct Mod {
    KernelModule m;
    std::vector<Region> regions;

    explicit Mod(const std::string& src) : m(parse(src, "<test>")), regions(find_regions(m)) {
        REQUIRE(!regions.empty());
    }
};

std::string wrap(const std::string& globals, const std::string& body) {
    return globals +
           "\nvoid f(void) {\n"
           "#pragma acc loop gang\n"
           "for (int g0 = 0; g0 < 1; g0++) {\n" +
           body + "\n}\n}\n";
}

SymbolTable syms_of(Mod& mod) {
    return build_ssa(mod.regions[0], module_symbols(mod.m, *mod.regions[0].fn)).symbols;
}

// The full optimizing pipeline on region 0, returning the emitted module text.
std::string optimize(Mod& mod, bool sat, bool bulk) {
    SsaProgram prog = build_ssa(mod.regions[0], module_symbols(mod.m, *mod.regions[0].fn));
    SsaGraph sg = from_ssa(prog);
    if (sat) saturate(sg.g, default_rules());
    Extraction x = extract_greedy(sg.g, sg.roots, CostModel{});
    EmitPlan plan = plan_temporaries(x, sg, prog);
    if (bulk) bulk_load_reorder(plan, x, sg, prog);
    std::vector<std::pair<Stmt*, StmtPtr>> bodies;
    bodies.emplace_back(mod.regions[0].anchor, build_region_body(prog, plan));
    return emit_module(mod.m, std::move(bodies));
}

}  // namespace

TEST_CASE("diff_test: a region against its own copy is exact") {
    std::string src = testutil::read_file(testutil::kernel_path("matmul.c"));
    Mod a(src);
    Mod b(src);
    DiffReport rep = diff_test(a.regions[0], b.regions[0], 20, 1e-6, syms_of(a));
    CHECK(rep.ok());
    CHECK(rep.n_trials == 20);
    CHECK(rep.max_rel_err == 0.0);
    CHECK(rep.max_abs_err == 0.0);
}

TEST_CASE("diff_test: a flipped sign is caught and located") {
    std::string src = testutil::read_file(testutil::kernel_path("matmul.c"));
    Mod a(src);
    Mod b(src);

    // Negate the first array store's RHS inside the optimized copy's region.
    std::function<Stmt*(Stmt&)> find_store = [&](Stmt& s) -> Stmt* {
        if (s.kind == StmtKind::Assign && s.lhs->kind == ExprKind::ArrayRef) return &s;
        if (s.then_s)
            if (Stmt* hit = find_store(*s.then_s)) return hit;
        if (s.else_s)
            if (Stmt* hit = find_store(*s.else_s)) return hit;
        if (s.body)
            if (Stmt* hit = find_store(*s.body)) return hit;
        for (auto& c : s.stmts)
            if (Stmt* hit = find_store(*c)) return hit;
        return nullptr;
    };
    Stmt* store = find_store(*b.regions[0].anchor->body);
    REQUIRE(store != nullptr);
    std::string base = store->lhs->name;
    store->rhs = make_unary(UnOp::Neg, std::move(store->rhs));

    DiffReport rep = diff_test(a.regions[0], b.regions[0], 10, 1e-6, syms_of(a));
    CHECK(!rep.ok());
    CHECK(rep.max_rel_err > 1e-6);
    bool located = false;
    for (const DiffFailure& f : rep.failures)
        if (f.location.rfind(base + "[", 0) == 0) located = true;
    CHECK(located);
}

TEST_CASE("diff_test: tiny absolute drift passes, real drift does not") {
    Mod tiny_a(wrap("double y;", "y = 0.0000000000001;"));  // 1e-13
    Mod tiny_b(wrap("double y;", "y = 0.0;"));
    DiffReport pass = diff_test(tiny_a.regions[0], tiny_b.regions[0], 5, 1e-6, syms_of(tiny_a));
    CHECK(pass.ok());  // |1e-13| below the absolute floor
    CHECK(pass.max_abs_err == doctest::Approx(1e-13));
    CHECK(pass.max_rel_err == 1.0);  // relative error is total, yet tolerated

    Mod big_a(wrap("double y;", "y = 0.001;"));
    Mod big_b(wrap("double y;", "y = 0.0;"));
    DiffReport fail = diff_test(big_a.regions[0], big_b.regions[0], 5, 1e-6, syms_of(big_a));
    CHECK(!fail.ok());
    CHECK(fail.failures.size() == 5);  // one per trial
    CHECK(fail.failures[0].location == "y");
    CHECK(fail.failures[0].want == doctest::Approx(0.001));
    CHECK(fail.failures[0].got == 0.0);
}

TEST_CASE("diff_test: integer state participates in the comparison") {
    Mod a(wrap("int k; int n;", "k = n + 1;"));
    Mod b(wrap("int k; int n;", "k = n + 2;"));
    DiffReport rep = diff_test(a.regions[0], b.regions[0], 3, 1e-6, syms_of(a));
    CHECK(!rep.ok());
    CHECK(rep.failures[0].location == "k");
}

TEST_CASE("diff_test: an evaluation error becomes a failure, not a crash") {
    Mod a(wrap("double y[4]; int n;", "y[0] = 1.0;"));
    Mod b(wrap("double y[4]; int n;", "y[n + 10] = 1.0;"));  // out of bounds
    DiffReport rep = diff_test(a.regions[0], b.regions[0], 3, 1e-6, syms_of(a));
    CHECK(!rep.ok());
    CHECK(rep.failures[0].location.rfind("error:", 0) == 0);
}

TEST_CASE("diff_test: deterministic across invocations") {
    std::string src = testutil::read_file(testutil::kernel_path("zsolve.c"));
    Mod a(src);
    Mod opt(src);
    std::string text = optimize(opt, true, true);
    KernelModule m2 = parse(text, "<optimized>");
    auto r2 = find_regions(m2);
    REQUIRE(!r2.empty());

    DiffReport r1 = diff_test(a.regions[0], r2[0], 10, 1e-6, syms_of(a));
    DiffReport rep2 = diff_test(a.regions[0], r2[0], 10, 1e-6, syms_of(a));
    CHECK(r1.ok());
    CHECK(r1.max_rel_err == rep2.max_rel_err);
    CHECK(r1.max_abs_err == rep2.max_abs_err);
    CHECK(r1.failures.size() == rep2.failures.size());
}

TEST_CASE("diff_test: full pipeline output passes at 1e-6 over 100 trials") {
    std::string src = testutil::read_file(testutil::kernel_path("zsolve.c"));
    Mod a(src);
    for (bool sat : {false, true}) {
        for (bool bulk : {false, true}) {
            CAPTURE(sat);
            CAPTURE(bulk);
            Mod opt(src);
            std::string text = optimize(opt, sat, bulk);
            KernelModule m2 = parse(text, "<optimized>");
            auto r2 = find_regions(m2);
            REQUIRE(!r2.empty());
            DiffReport rep = diff_test(a.regions[0], r2[0], 100, 1e-6, syms_of(a));
            CHECK_MESSAGE(rep.ok(), "failures: ", rep.failures.size(), " max_rel ", rep.max_rel_err);
        }
    }
}
