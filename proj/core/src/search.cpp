#include "dioph/search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dioph/parallel.hpp"

namespace dioph {

namespace {

// values[i][j] = 2^i 3^j for i, j <= bound
std::vector<std::vector<Natural>> term_table(std::uint64_t bound)
{
    std::vector<std::vector<Natural>> t(bound + 1, std::vector<Natural>(bound + 1));
    for (std::uint64_t i = 0; i <= bound; ++i) {
        for (std::uint64_t j = 0; j <= bound; ++j) t[i][j] = pow(Natural(2), i) * pow(Natural(3), j);
    }
    return t;
}

struct TermPair {
    Natural sum;
    std::uint64_t two0, three0, two1, three1;
};

} // namespace

std::vector<CaseInstance> search_case(const SearchConfig& cfg)
{
    if (!cfg.case_id) throw std::invalid_argument("search_case: no case selected");
    const CaseId id = *cfg.case_id;
    const std::uint64_t side = cfg.bound + 1;
    const auto table = term_table(cfg.bound);

    // One task per value of the first variable.
    std::vector<std::vector<CaseInstance>> found(side);
    for_each_task(side, cfg.workers, [&](std::size_t first) {
        CaseInstance inst{id, {first, 0, 0, 0}};
        auto& b = inst.binding;
        for (b[1] = 0; b[1] < side; ++b[1]) {
            for (b[2] = 0; b[2] < side; ++b[2]) {
                for (b[3] = 0; b[3] < side; ++b[3]) {
                    const ExponentTuple t = inst.instantiate();
                    if (table[t[0]][t[1]] + table[t[2]][t[3]] == table[t[4]][t[5]] + table[t[6]][t[7]]) {
                        found[first].push_back(*canonical_instance(id, t));
                    }
                }
            }
        }
    });

    std::set<CaseInstance> merged;
    for (const auto& part : found) merged.insert(part.begin(), part.end());
    return {merged.begin(), merged.end()};
}

std::vector<MasterSolution> search_master(const SearchConfig& cfg)
{
    // A holding tuple is two unordered pairs of terms with the same sum, so
    // group all pairs by sum instead of walking the (bound+1)^8 box.
    const auto table = term_table(cfg.bound);
    std::vector<TermPair> pairs;
    const std::uint64_t side = cfg.bound + 1;
    for (std::uint64_t t0 = 0; t0 < side * side; ++t0) {
        for (std::uint64_t t1 = t0; t1 < side * side; ++t1) {
            const auto i0 = t0 / side, j0 = t0 % side, i1 = t1 / side, j1 = t1 % side;
            pairs.push_back({table[i0][j0] + table[i1][j1], i0, j0, i1, j1});
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const TermPair& x, const TermPair& y) { return x.sum < y.sum; });

    std::vector<std::pair<std::size_t, std::size_t>> groups; // [begin, end)
    for (std::size_t i = 0; i < pairs.size();) {
        std::size_t j = i + 1;
        while (j < pairs.size() && pairs[j].sum == pairs[i].sum) ++j;
        groups.emplace_back(i, j);
        i = j;
    }

    std::vector<std::vector<MasterSolution>> found(groups.size());
    for_each_task(groups.size(), cfg.workers, [&](std::size_t g) {
        const auto [begin, end] = groups[g];
        for (std::size_t u = begin; u < end; ++u) {
            for (std::size_t v = u; v < end; ++v) {
                const auto& l = pairs[u];
                const auto& r = pairs[v];
                const ExponentTuple t{{l.two0, l.three0, l.two1, l.three1, r.two0, r.three0, r.two1, r.three1}};
                if (!is_normalized(t)) continue;
                const ExponentTuple c = canonical_form(t);
                const auto inst = classify(c);
                if (!inst) throw std::logic_error("search_master: holding tuple has no case: " + c.str());
                found[g].push_back({c, *inst});
            }
        }
    });

    std::set<MasterSolution> merged;
    for (const auto& part : found) merged.insert(part.begin(), part.end());
    return {merged.begin(), merged.end()};
}

} // namespace dioph
