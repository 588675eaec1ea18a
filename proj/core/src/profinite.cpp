#include "spectra/profinite.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spectra {

int InverseSystem::project(int from, int point, int to) const {
    if (to > from || from >= static_cast<int>(levels()) || to < 0) throw LevelOutOfRange();
    while (from > to) {
        point = transitions[from - 1][point];
        --from;
    }
    return point;
}

InverseSystem make_system(std::vector<int> level_sizes, std::vector<std::vector<int>> transitions) {
    if (level_sizes.empty()) throw std::invalid_argument("a system needs at least one level");
    if (transitions.size() + 1 != level_sizes.size())
        throw std::invalid_argument("one transition map per level above the first");
    for (std::size_t k = 0; k < transitions.size(); ++k) {
        if (static_cast<int>(transitions[k].size()) != level_sizes[k + 1])
            throw std::invalid_argument("transition map arity mismatch");
        for (int img : transitions[k])
            if (img < 0 || img >= level_sizes[k])
                throw std::invalid_argument("transition map image out of range");
    }
    for (int sz : level_sizes)
        if (sz < 1) throw std::invalid_argument("levels must be nonempty");
    return {std::move(level_sizes), std::move(transitions)};
}

InverseSystem cantor_system(int depth) {
    std::vector<int> sizes;
    std::vector<std::vector<int>> trans;
    for (int k = 0; k <= depth; ++k) {
        sizes.push_back(1 << k);
        if (k > 0) {
            std::vector<int> t(1 << k);
            for (int z = 0; z < (1 << k); ++z) t[z] = z >> 1;  // drop the newest bit
            trans.push_back(std::move(t));
        }
    }
    return make_system(std::move(sizes), std::move(trans));
}

ClopenSet canonicalize(const InverseSystem& sys, ClopenSet c) {
    std::sort(c.members.begin(), c.members.end());
    c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
    while (c.level > 0) {
        const auto& t = sys.transitions[c.level - 1];
        std::set<int> image;
        for (int z : c.members) image.insert(t[z]);
        std::vector<int> pre;
        for (int z = 0; z < sys.level_sizes[c.level]; ++z)
            if (image.count(t[z])) pre.push_back(z);
        if (pre != c.members) break;
        c.level -= 1;
        c.members.assign(image.begin(), image.end());
    }
    return c;
}

ClopenSet make_clopen(const InverseSystem& sys, int level, std::vector<int> members) {
    if (level < 0 || level >= static_cast<int>(sys.levels())) throw LevelOutOfRange();
    for (int z : members)
        if (z < 0 || z >= sys.level_sizes[level])
            throw std::invalid_argument("clopen member out of range");
    return canonicalize(sys, ClopenSet{level, std::move(members)});
}

ClopenSet full_clopen(const InverseSystem& sys) {
    std::vector<int> all(sys.level_sizes[0]);
    for (int z = 0; z < sys.level_sizes[0]; ++z) all[z] = z;
    return {0, std::move(all)};
}

ClopenSet empty_clopen(const InverseSystem&) { return {0, {}}; }

std::vector<int> pullback(const InverseSystem& sys, const ClopenSet& c, int to_level) {
    if (to_level < c.level || to_level >= static_cast<int>(sys.levels())) throw LevelOutOfRange();
    std::set<int> members(c.members.begin(), c.members.end());
    std::vector<int> out;
    for (int z = 0; z < sys.level_sizes[to_level]; ++z)
        if (members.count(sys.project(to_level, z, c.level))) out.push_back(z);
    return out;
}

ClopenSet clopen_boolean(const InverseSystem& sys, const ClopenSet& a, const ClopenSet& b,
                         ClopenOp op) {
    if (op == ClopenOp::Complement) {
        std::set<int> members(a.members.begin(), a.members.end());
        std::vector<int> out;
        for (int z = 0; z < sys.level_sizes[a.level]; ++z)
            if (!members.count(z)) out.push_back(z);
        return canonicalize(sys, ClopenSet{a.level, std::move(out)});
    }
    int level = std::max(a.level, b.level);
    auto pa = pullback(sys, a, level);
    auto pb = pullback(sys, b, level);
    std::vector<int> out;
    if (op == ClopenOp::Union)
        std::set_union(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(out));
    else
        std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(out));
    return canonicalize(sys, ClopenSet{level, std::move(out)});
}

ClopenSet clopen_symdiff(const InverseSystem& sys, const ClopenSet& a, const ClopenSet& b) {
    int level = std::max(a.level, b.level);
    auto pa = pullback(sys, a, level);
    auto pb = pullback(sys, b, level);
    std::vector<int> out;
    std::set_symmetric_difference(pa.begin(), pa.end(), pb.begin(), pb.end(),
                                  std::back_inserter(out));
    return canonicalize(sys, ClopenSet{level, std::move(out)});
}

StepFn step_add(const InverseSystem& sys, const StepFn& a, const StepFn& b) {
    int level = std::max(a.level, b.level);
    auto ra = step_at_level(sys, a, level);
    auto rb = step_at_level(sys, b, level);
    for (std::size_t i = 0; i < ra.values.size(); ++i) ra.values[i] += rb.values[i];
    return ra;
}

StepFn step_mul(const InverseSystem& sys, const StepFn& a, const StepFn& b) {
    int level = std::max(a.level, b.level);
    auto ra = step_at_level(sys, a, level);
    auto rb = step_at_level(sys, b, level);
    for (std::size_t i = 0; i < ra.values.size(); ++i) ra.values[i] *= rb.values[i];
    return ra;
}

StepFn indicator(const InverseSystem& sys, const ClopenSet& c) {
    StepFn s;
    s.level = c.level;
    s.values.assign(sys.level_sizes[c.level], Rational(0));
    for (int z : c.members) s.values[z] = 1;
    return s;
}

bool is_idempotent_step(const InverseSystem& sys, const StepFn& s) {
    auto sq = step_mul(sys, s, s);
    auto at = step_at_level(sys, s, sq.level);
    return sq == at;
}

std::vector<std::pair<Rational, ClopenSet>> step_decompose(const InverseSystem& sys,
                                                           const StepFn& s) {
    std::map<Rational, std::vector<int>> by_value;
    for (int z = 0; z < static_cast<int>(s.values.size()); ++z)
        by_value[s.values[z]].push_back(z);
    std::vector<std::pair<Rational, ClopenSet>> out;
    for (auto& [v, pts] : by_value)
        out.push_back({v, make_clopen(sys, s.level, pts)});
    return out;
}

RefinementCert refine_covering(const InverseSystem& sys, const Covering& u) {
    int k0 = 0;
    for (const auto& part : u.parts) k0 = std::max(k0, part.level);
    std::vector<std::vector<int>> pulled;
    for (const auto& part : u.parts) pulled.push_back(pullback(sys, part, k0));
    RefinementCert cert;
    cert.k0 = k0;
    cert.rho.resize(sys.level_sizes[k0]);
    for (int z = 0; z < sys.level_sizes[k0]; ++z) {
        int part = -1;
        for (std::size_t i = 0; i < pulled.size(); ++i)
            if (std::binary_search(pulled[i].begin(), pulled[i].end(), z)) {
                part = static_cast<int>(i);
                break;
            }
        if (part < 0) throw NotACovering(Cylinder{k0, z});
        cert.rho[z] = part;
    }
    return cert;
}

bool validate_refinement(const InverseSystem& sys, const Covering& u, const RefinementCert& cert) {
    if (cert.rho.size() != static_cast<std::size_t>(sys.level_sizes[cert.k0])) return false;
    for (int z = 0; z < sys.level_sizes[cert.k0]; ++z) {
        int i = cert.rho[z];
        if (i < 0 || i >= static_cast<int>(u.parts.size())) return false;
        auto fiber = pullback(sys, u.parts[i], cert.k0);
        if (!std::binary_search(fiber.begin(), fiber.end(), z)) return false;
    }
    return true;
}

StepFn separating_idempotent(const InverseSystem& sys, const Cylinder& x, const Cylinder& y) {
    // the cylinders are disjoint or nested; an idempotent separates them only
    // when the shallower projection already distinguishes them
    bool distinct = x.level <= y.level
                        ? sys.project(y.level, y.point, x.level) != x.point
                        : sys.project(x.level, x.point, y.level) != y.point;
    if (!distinct) throw NotDistinct();
    return indicator(sys, make_clopen(sys, x.level, {x.point}));
}

}  // namespace spectra
