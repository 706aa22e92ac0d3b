#include "satcc/extract.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <functional>
#include <set>

#include "satcc/diag.hpp"

namespace satcc {

namespace {

constexpr long long kInf = LLONG_MAX / 4;

using Clock = std::chrono::steady_clock;

// Candidate node of a class, ordered by (cost, creation serial).
struct Cand {
    ENode node;
    int serial;
    long long cost;
};

std::map<int, std::vector<Cand>> candidates(const EGraph& g, const CostModel& m) {
    std::map<int, std::vector<Cand>> out;
    for (int id : g.class_ids()) {
        auto& v = out[id];
        for (auto& [n, serial] : g.canonical_nodes(id)) v.push_back({n, serial, node_cost(n, m)});
        std::sort(v.begin(), v.end(), [](const Cand& a, const Cand& b) {
            return a.cost != b.cost ? a.cost < b.cost : a.serial < b.serial;
        });
    }
    return out;
}

// Bottom-up tree-cost fixpoint. Returns per-class best (cost, candidate).
std::map<int, std::pair<long long, const Cand*>> greedy_table(
    const EGraph& g, const std::map<int, std::vector<Cand>>& cands) {
    std::map<int, std::pair<long long, const Cand*>> best;
    for (auto& [id, v] : cands) best[id] = {kInf, nullptr};
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [id, v] : cands) {
            for (const Cand& c : v) {
                long long total = c.cost;
                bool ok = true;
                if (!is_selection_leaf(c.node)) {
                    for (int k : c.node.kids) {
                        long long kb = best.at(g.find(k)).first;
                        if (kb >= kInf) {
                            ok = false;
                            break;
                        }
                        total += kb;
                        if (total >= kInf) total = kInf - 1;
                    }
                }
                if (!ok) continue;
                auto& slot = best[id];
                if (total < slot.first ||
                    (total == slot.first && slot.second && c.serial < slot.second->serial)) {
                    slot = {total, &c};
                    changed = true;
                }
            }
        }
    }
    return best;
}

void close_over(const EGraph& g, const std::map<int, std::pair<long long, const Cand*>>& best,
                int cls, std::map<int, ENode>& choice) {
    cls = g.find(cls);
    if (choice.count(cls)) return;
    const Cand* c = best.at(cls).second;
    if (!c) throw InternalError("no finite selection for class c" + std::to_string(cls));
    choice.emplace(cls, c->node);
    if (!is_selection_leaf(c->node))
        for (int k : c->node.kids) close_over(g, best, k, choice);
}

struct Timeout {};

// Branch-and-bound exact search.
struct Exact {
    const EGraph& g;
    const std::map<int, std::vector<Cand>>& cands;
    Clock::time_point deadline;

    std::map<int, const Cand*> chosen;
    std::set<int> needed;
    long long cost_so_far = 0;
    long long lb_needed = 0;  // Σ cheapest cost over `needed`

    long long best_cost;
    std::map<int, const Cand*> best_choice;

    long long cheapest(int cls) const { return cands.at(cls).empty() ? kInf : cands.at(cls)[0].cost; }

    bool reaches(int from, int target) const {
        if (from == target) return true;
        std::vector<int> stack{from};
        std::set<int> seen;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            if (!seen.insert(c).second) continue;
            auto it = chosen.find(c);
            if (it == chosen.end() || is_selection_leaf(it->second->node)) continue;
            for (int k : it->second->node.kids) {
                int kc = g.find(k);
                if (kc == target) return true;
                stack.push_back(kc);
            }
        }
        return false;
    }

    void require(int cls, std::vector<int>& added) {
        cls = g.find(cls);
        if (chosen.count(cls) || needed.count(cls)) return;
        needed.insert(cls);
        lb_needed += cheapest(cls);
        added.push_back(cls);
    }

    void search() {
        if (Clock::now() > deadline) throw Timeout{};
        if (needed.empty()) {
            if (cost_so_far < best_cost) {
                best_cost = cost_so_far;
                best_choice = chosen;
            }
            return;
        }
        if (cost_so_far + lb_needed >= best_cost) return;  // admissible bound

        int cls = *needed.begin();
        needed.erase(cls);
        lb_needed -= cheapest(cls);

        for (const Cand& c : cands.at(cls)) {
            if (cost_so_far + c.cost + lb_needed >= best_cost) break;  // sorted by cost
            bool cyclic = false;
            if (!is_selection_leaf(c.node))
                for (int k : c.node.kids)
                    if (reaches(g.find(k), cls)) {
                        cyclic = true;
                        break;
                    }
            if (cyclic) continue;

            chosen[cls] = &c;
            cost_so_far += c.cost;
            std::vector<int> added;
            if (!is_selection_leaf(c.node))
                for (int k : c.node.kids) require(k, added);

            search();

            for (int k : added) {
                needed.erase(k);
                lb_needed -= cheapest(k);
            }
            cost_so_far -= c.cost;
            chosen.erase(cls);
        }

        needed.insert(cls);
        lb_needed += cheapest(cls);
    }
};

}  // namespace

const char* method_name(ExtractMethod m) {
    switch (m) {
        case ExtractMethod::Ilp: return "ilp";
        case ExtractMethod::Greedy: return "greedy";
        case ExtractMethod::Brute: return "brute";
    }
    return "?";
}

Extraction extract_greedy(const EGraph& g, const std::vector<std::pair<int, int>>& roots,
                          const CostModel& m) {
    Extraction out;
    out.roots = roots;
    out.method = ExtractMethod::Greedy;
    if (roots.empty()) return out;

    auto cands = candidates(g, m);
    auto best = greedy_table(g, cands);
    for (auto& [ssa_id, cls] : roots) close_over(g, best, cls, out.choice);
    out.objective = dag_cost(g, out.choice, roots, m);
    return out;
}

Extraction extract_ilp(const EGraph& g, const std::vector<std::pair<int, int>>& roots,
                       const CostModel& m, const ExtractLimits& lim) {
    Extraction incumbent = extract_greedy(g, roots, m);
    if (roots.empty()) {
        incumbent.method = ExtractMethod::Ilp;
        return incumbent;
    }

    auto cands = candidates(g, m);
    Exact ex{g,
             cands,
             Clock::now() + std::chrono::microseconds(static_cast<long long>(lim.max_time * 1e6)),
             {},
             {},
             0,
             0,
             incumbent.objective.total,
             {}};
    std::vector<int> added;
    for (auto& [ssa_id, cls] : roots) ex.require(cls, added);

    try {
        ex.search();
    } catch (const Timeout&) {
        incumbent.timed_out = true;
        return incumbent;  // method stays greedy: result is not proven optimal
    }

    Extraction out;
    out.roots = roots;
    out.method = ExtractMethod::Ilp;
    if (ex.best_choice.empty()) {
        // Greedy was already optimal; keep its (serial-preferring) choices.
        out.choice = std::move(incumbent.choice);
    } else {
        for (auto& [cls, cand] : ex.best_choice) out.choice.emplace(cls, cand->node);
    }
    out.objective = dag_cost(g, out.choice, roots, m);
    return out;
}

Extraction extract_brute(const EGraph& g, const std::vector<std::pair<int, int>>& roots,
                         const CostModel& m) {
    size_t total_nodes = 0;
    for (int id : g.class_ids()) total_nodes += g.canonical_nodes(id).size();
    if (total_nodes > 25)
        throw InternalError("brute-force extraction guard: " + std::to_string(total_nodes) +
                            " nodes > 25");

    Extraction out;
    out.roots = roots;
    out.method = ExtractMethod::Brute;
    if (roots.empty()) return out;

    auto cands = candidates(g, m);
    std::vector<int> ids;
    for (auto& [id, v] : cands)
        if (!v.empty()) ids.push_back(id);

    std::vector<size_t> pick(ids.size(), 0);
    long long best_cost = kInf;
    std::map<int, ENode> best_choice;

    auto evaluate = [&]() -> long long {
        // DFS from roots; grey/black coloring rejects cycles.
        std::map<int, int> color;  // 1 grey, 2 black
        long long total = 0;
        std::function<bool(int)> visit = [&](int cls) {
            cls = g.find(cls);
            int& c = color[cls];
            if (c == 2) return true;
            if (c == 1) return false;  // cycle
            c = 1;
            size_t at = static_cast<size_t>(
                std::lower_bound(ids.begin(), ids.end(), cls) - ids.begin());
            const Cand& chosen = cands.at(cls)[pick[at]];
            total += chosen.cost;
            if (!is_selection_leaf(chosen.node))
                for (int k : chosen.node.kids)
                    if (!visit(k)) return false;
            c = 2;
            return true;
        };
        for (auto& [ssa_id, cls] : roots)
            if (!visit(cls)) return kInf;
        return total;
    };

    for (;;) {
        long long total = evaluate();
        if (total < best_cost) {
            best_cost = total;
            best_choice.clear();
            for (size_t i = 0; i < ids.size(); i++)
                best_choice.emplace(ids[i], cands.at(ids[i])[pick[i]].node);
        }
        // Odometer over candidate indices (candidates sorted by cost/serial,
        // so the first minimum found prefers earlier nodes).
        size_t i = 0;
        while (i < ids.size() && ++pick[i] == cands.at(ids[i]).size()) pick[i++] = 0;
        if (i == ids.size()) break;
    }
    if (best_cost >= kInf) throw InternalError("no acyclic selection exists");

    // Trim to the classes actually reachable.
    Extraction trimmed;
    trimmed.roots = roots;
    trimmed.method = ExtractMethod::Brute;
    std::vector<int> stack;
    std::set<int> seen;
    for (auto& [ssa_id, cls] : roots) stack.push_back(g.find(cls));
    while (!stack.empty()) {
        int c = g.find(stack.back());
        stack.pop_back();
        if (!seen.insert(c).second) continue;
        const ENode& n = best_choice.at(c);
        trimmed.choice.emplace(c, n);
        if (!is_selection_leaf(n))
            for (int k : n.kids) stack.push_back(g.find(k));
    }
    trimmed.objective = dag_cost(g, trimmed.choice, roots, m);
    return trimmed;
}

bool validate_extraction(const EGraph& g, const Extraction& x, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };

    for (auto& [cls, node] : x.choice) {
        if (g.find(cls) != cls) return fail("choice key c" + std::to_string(cls) + " not canonical");
        ENode cn = g.canonicalize(node);
        bool member = false;
        for (auto& [n, serial] : g.canonical_nodes(cls))
            if (n == cn) member = true;
        if (!member) return fail("chosen node not a member of c" + std::to_string(cls));
    }

    // Closure + acyclicity from the roots.
    std::map<int, int> color;
    std::function<bool(int)> visit = [&](int cls) -> bool {
        cls = g.find(cls);
        int& c = color[cls];
        if (c == 2) return true;
        if (c == 1) return fail("cycle through c" + std::to_string(cls));
        auto it = x.choice.find(cls);
        if (it == x.choice.end()) return fail("reachable class c" + std::to_string(cls) + " unchosen");
        c = 1;
        if (!is_selection_leaf(it->second))
            for (int k : it->second.kids)
                if (!visit(k)) return false;
        c = 2;
        return true;
    };
    for (auto& [ssa_id, cls] : x.roots)
        if (!visit(cls)) return false;

    // The set of priced classes must be exactly the classes reachable from
    // the roots (costs themselves depend on the model used at build time).
    if (!x.objective.per_class.empty()) {
        std::set<int> reachable;
        for (auto& [cls, c] : color)
            if (c == 2) reachable.insert(cls);
        std::set<int> priced;
        for (auto& [cls, cost] : x.objective.per_class) priced.insert(g.find(cls));
        if (reachable != priced) return fail("objective covers a different class set than the roots reach");
    }
    return true;
}

}  // namespace satcc
