#include "dhh/diffcat.hpp"

#include <algorithm>
#include <numeric>

#include "dhh/diffmod.hpp"
#include "dhh/errors.hpp"

namespace dhh::diffcat {

DiffSet::DiffSet(std::uint32_t n, std::vector<std::uint32_t> s) : size(n), sigma(std::move(s)) {
    if (sigma.size() != size) throw ShapeMismatch("DiffSet: sigma size");
    for (std::uint32_t t : sigma)
        if (t >= size) throw ShapeMismatch("DiffSet: sigma target out of range");
}

DiffSet DiffSet::identity(std::uint32_t n) {
    std::vector<std::uint32_t> s(n);
    std::iota(s.begin(), s.end(), 0);
    return DiffSet(n, std::move(s));
}

DiffSet DiffSet::cycle(std::uint32_t n) {
    std::vector<std::uint32_t> s(n);
    for (std::uint32_t i = 0; i < n; ++i) s[i] = (i + 1) % n;
    return DiffSet(n, std::move(s));
}

std::vector<std::uint32_t> fix(const DiffSet& x) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < x.size; ++i)
        if (x.sigma[i] == i) out.push_back(i);
    return out;
}

namespace {
std::uint32_t uf_find(std::vector<std::uint32_t>& parent, std::uint32_t i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}
}  // namespace

std::vector<std::vector<std::uint32_t>> quo(const DiffSet& x) {
    std::vector<std::uint32_t> parent(x.size);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::uint32_t i = 0; i < x.size; ++i) {
        std::uint32_t a = uf_find(parent, i), b = uf_find(parent, x.sigma[i]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::vector<std::uint32_t>> classes(x.size);
    for (std::uint32_t i = 0; i < x.size; ++i) classes[uf_find(parent, i)].push_back(i);
    classes.erase(std::remove_if(classes.begin(), classes.end(),
                                 [](const auto& c) { return c.empty(); }),
                  classes.end());
    return classes;
}

TruncatedShift free_shift(std::uint32_t set_size, std::uint32_t depth) {
    if (depth < 1) throw WindowTooSmall("free_shift: depth must be >= 1");
    TruncatedShift t;
    t.base_size = set_size;
    t.depth = depth;
    t.partial = true;
    return t;
}

using dhh::diffmod::DiffModule;

DiffModule set_tensor(const DiffSet& e, const DiffModule& m) {
    // Permutation-block composite: sigma = P_E (x) sigma_M, action = I (x) act.
    const std::uint32_t p = m.p();
    linfp::Matrix perm(e.size, e.size, p);
    for (std::uint32_t i = 0; i < e.size; ++i) perm.set(e.sigma[i], i, 1);
    DiffModule out;
    out.ring = m.ring;
    out.dim = e.size * m.dim;
    out.sigma = perm.kron(m.sigma);
    out.act.reserve(m.act.size());
    linfp::Matrix id = linfp::Matrix::identity(e.size, p);
    for (const auto& a : m.act) out.act.push_back(id.kron(a));
    return out;
}

DiffModule set_tensor_truncated(const TruncatedShift& e, const DiffModule& m) {
    const std::uint32_t p = m.p();
    const std::uint32_t n = e.size();
    linfp::Matrix shift(n, n, p);
    for (std::uint32_t i = 0; i < n; ++i)
        if (e.sigma_defined(i)) shift.set(e.sigma(i), i, 1);
    DiffModule out;
    out.ring = m.ring;
    out.dim = n * m.dim;
    out.sigma = shift.kron(m.sigma);
    out.act.reserve(m.act.size());
    linfp::Matrix id = linfp::Matrix::identity(n, p);
    for (const auto& a : m.act) out.act.push_back(id.kron(a));
    return out;
}

std::uint64_t count_truncation_respecting_maps(const TruncatedShift& e, const DiffSet& x) {
    // A map is free on layer 0 and then forced along defined sigma edges, so
    // enumerate assignments of layer 0 only; the forcing never conflicts
    // because each element has at most one incoming edge.
    std::uint64_t count = 1;
    for (std::uint32_t s = 0; s < e.base_size; ++s) count *= x.size;
    return count;
}

}  // namespace dhh::diffcat
