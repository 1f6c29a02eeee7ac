#include "quandlelab/rackhomology.hpp"

#include <json.hpp>

#include <numeric>

#include "quandlelab/errors.hpp"

namespace ql {

namespace {

bool degenerate_xpart(const std::vector<int>& t, int offset) {
    for (size_t i = offset + 1; i < t.size(); ++i)
        if (t[i] == t[i - 1]) return true;
    return false;
}

int y_offset(const RackComplexSpec& spec) { return spec.yset == YSet::primitive ? 1 : 0; }

long rack_basis_count(const RackComplexSpec& spec, int degree) {
    long c = spec.yset == YSet::primitive ? spec.q.n : 1;
    for (int i = 0; i < degree; ++i) c *= spec.q.n;
    return c;
}

} // namespace

RackBasis::RackBasis(const RackComplexSpec& spec, int degree) : degree_(degree) {
    if (degree < 0) throw InputError("RackBasis: negative degree");
    long raw = rack_basis_count(spec, degree);
    if (raw > spec.column_cap && !spec.large_ok)
        throw CapError("rack complex basis exceeds column cap (" + std::to_string(raw) +
                       " tuples); use the large option to override");
    int off = y_offset(spec);
    int len = off + degree;
    std::vector<int> t(len, 0);
    while (true) {
        if (spec.flavor == Flavor::rack || !degenerate_xpart(t, off)) {
            index_[t] = long(tuples_.size());
            tuples_.push_back(t);
        }
        int pos = len - 1;
        while (pos >= 0 && t[pos] == spec.q.n - 1) t[pos--] = 0;
        if (pos < 0) break;
        ++t[pos];
        if (len == 0) break;
    }
    if (len == 0 && tuples_.empty()) {
        // degree 0, point: the single empty tuple
        index_[{}] = 0;
        tuples_.push_back({});
    }
}

long RackBasis::index_of(const std::vector<int>& t) const {
    auto it = index_.find(t);
    return it == index_.end() ? -1 : it->second;
}

void Chain::add(const std::vector<int>& t, std::int64_t c) {
    if (c == 0) return;
    auto it = terms.find(t);
    if (it == terms.end()) terms[t] = c;
    else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Chain boundary_of_tuple(const RackComplexSpec& spec, const std::vector<int>& t) {
    int off = y_offset(spec);
    int n = int(t.size()) - off;
    Chain out;
    out.degree = n - 1;
    const auto& q = spec.q;
    for (int i = 1; i <= n; ++i) {
        int xi = t[off + i - 1];
        std::int64_t sign = (i % 2 == 0) ? 1 : -1; // (-1)^i
        std::vector<int> acted;
        acted.reserve(t.size() - 1);
        if (off) acted.push_back(q.op[t[0]][xi]);
        for (int j = 1; j < i; ++j) acted.push_back(q.op[t[off + j - 1]][xi]);
        for (int j = i + 1; j <= n; ++j) acted.push_back(t[off + j - 1]);
        std::vector<int> dropped;
        dropped.reserve(t.size() - 1);
        for (int j = 0; j < off; ++j) dropped.push_back(t[j]);
        for (int j = 1; j <= n; ++j)
            if (j != i) dropped.push_back(t[off + j - 1]);
        if (spec.flavor == Flavor::rack || !degenerate_xpart(acted, off)) out.add(acted, sign);
        if (spec.flavor == Flavor::rack || !degenerate_xpart(dropped, off)) out.add(dropped, -sign);
    }
    return out;
}

Chain boundary_of_chain(const RackComplexSpec& spec, const Chain& z) {
    Chain out;
    out.degree = z.degree - 1;
    for (auto& [t, c] : z.terms) {
        Chain b = boundary_of_tuple(spec, t);
        for (auto& [bt, bc] : b.terms) out.add(bt, bc * c);
    }
    return out;
}

IntMatrix boundary_matrix(const RackComplexSpec& spec, int n) {
    if (n < 1) throw InputError("boundary_matrix: degree must be >= 1");
    RackBasis src(spec, n), dst(spec, n - 1);
    IntMatrix m(dst.size(), src.size());
    for (long c = 0; c < src.size(); ++c) {
        Chain b = boundary_of_tuple(spec, src.tuple(c));
        for (auto& [t, coeff] : b.terms) {
            long r = dst.index_of(t);
            if (r < 0) throw ConsistencyError("boundary target missing from basis");
            m.add(r, c, coeff);
        }
    }
    m.normalize_storage();
    return m;
}

RackHomology::RackHomology(const RackComplexSpec& spec, int degree, bool want_classes)
    : spec_(spec), basis_n_(spec, degree) {
    IntMatrix d_out = boundary_matrix(spec, degree);
    IntMatrix d_in = boundary_matrix(spec, degree + 1);
    result_ = homology_at(d_in, d_out, want_classes);
}

std::vector<std::int64_t> RackHomology::class_of(const Chain& z) const {
    if (z.degree != basis_n_.degree()) throw InputError("cycle degree mismatch");
    // project degenerate terms out (quandle flavor), then check cycle
    Chain proj;
    proj.degree = z.degree;
    int off = y_offset(spec_);
    for (auto& [t, c] : z.terms) {
        if (spec_.flavor == Flavor::quandle && degenerate_xpart(t, off)) continue;
        proj.add(t, c);
    }
    if (!boundary_of_chain(spec_, proj).is_zero())
        throw InputError("class_of: chain is not a cycle");
    if (!result_.classes) throw InputError("class_of: homology built without classes");
    std::vector<std::int64_t> vec(basis_n_.size(), 0);
    for (auto& [t, c] : proj.terms) {
        long i = basis_n_.index_of(t);
        if (i < 0) throw InputError("class_of: tuple out of basis");
        vec[i] = c;
    }
    return result_.classes->coords_of(vec);
}

std::int64_t RackHomology::order_of_class(const std::vector<std::int64_t>& coords) const {
    return result_.group.element_order(coords);
}

AbGroup homology(const QuandleTable& q, int n, Flavor flavor, YSet yset, long column_cap,
                 bool large_ok) {
    RackComplexSpec spec{q, yset, flavor, column_cap, large_ok};
    IntMatrix d_out = boundary_matrix(spec, n);
    IntMatrix d_in = boundary_matrix(spec, n + 1);
    return homology_at(d_in, d_out, false).group;
}

// ---- two-cocycles ----------------------------------------------------------

std::string CocycleTable::to_json() const {
    nlohmann::json j;
    j["modulus"] = modulus;
    nlohmann::json vals = nlohmann::json::object();
    for (size_t x = 0; x < values.size(); ++x)
        for (size_t y = 0; y < values.size(); ++y)
            if (values[x][y] != 0)
                vals[std::to_string(x) + "," + std::to_string(y)] = values[x][y];
    j["values"] = std::move(vals);
    return j.dump();
}

CocycleTable CocycleTable::from_json(const std::string& text, int quandle_size) {
    auto j = nlohmann::json::parse(text);
    CocycleTable t;
    t.modulus = j.at("modulus").get<std::int64_t>();
    if (t.modulus < 2) throw InputError("cocycle modulus must be >= 2");
    t.values.assign(quandle_size, std::vector<std::int64_t>(quandle_size, 0));
    for (auto& [key, val] : j.at("values").items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw InputError("cocycle key must be \"x,y\"");
        int x = std::stoi(key.substr(0, comma));
        int y = std::stoi(key.substr(comma + 1));
        if (x < 0 || x >= quandle_size || y < 0 || y >= quandle_size)
            throw InputError("cocycle key out of range");
        std::int64_t v = val.get<std::int64_t>();
        t.values[x][y] = ((v % t.modulus) + t.modulus) % t.modulus;
    }
    return t;
}

bool is_quandle_two_cocycle(const QuandleTable& q, const CocycleTable& phi) {
    if (int(phi.values.size()) != q.n) return false;
    std::int64_t m = phi.modulus;
    for (int x = 0; x < q.n; ++x)
        if (phi.values[x][x] % m != 0) return false;
    for (int x = 0; x < q.n; ++x)
        for (int y = 0; y < q.n; ++y)
            for (int z = 0; z < q.n; ++z) {
                std::int64_t v = phi.at(q.op[x][y], z) - phi.at(x, z) -
                                 phi.at(q.op[x][z], q.op[y][z]) + phi.at(x, y);
                if (((v % m) + m) % m != 0) return false;
            }
    return true;
}

TwoCocycleBasis two_cocycles(const QuandleTable& q, std::int64_t m) {
    if (m < 2) throw InputError("two_cocycles: modulus must be >= 2");
    RackComplexSpec spec{q, YSet::point, Flavor::quandle, 500000, false};
    RackBasis basis2(spec, 2);
    IntMatrix d2 = boundary_matrix(spec, 2); // n1 x n2
    IntMatrix d3 = boundary_matrix(spec, 3); // n2 x n3
    long n2 = basis2.size();

    // Cocycle lattice L = { v : d3^T v ≡ 0 (m) } via SNF of d3^T.
    SnfOptions oA;
    oA.want_V = true;
    oA.want_Vinv = true;
    auto sA = smith_normal_form(d3.transposed(), oA);
    std::vector<std::int64_t> scale(n2, 1);
    for (long j = 0; j < sA.rank; ++j) scale[j] = m / std::gcd(sA.factors[j], m);
    // L = V * diag(scale); coordinates of u in L: (Vinv u)_j / scale_j.
    std::vector<std::vector<std::int64_t>> vinv(n2, std::vector<std::int64_t>(n2, 0));
    sA.Vinv->for_each_nonzero([&](long i, long j, std::int64_t v) { vinv[i][j] = v; });
    auto l_coords = [&](const std::vector<std::int64_t>& u) {
        std::vector<std::int64_t> z(n2, 0);
        for (long i = 0; i < n2; ++i) {
            std::int64_t acc = 0;
            for (long j = 0; j < n2; ++j) acc += vinv[i][j] * u[j];
            if (acc % scale[i] != 0)
                throw ConsistencyError("two_cocycles: vector outside the cocycle lattice");
            z[i] = acc / scale[i];
        }
        return z;
    };

    // Relations in L-coordinates: m*e_t and the coboundaries d2^T e_g.
    IntMatrix d2t = d2.transposed(); // n2 x n1
    long n1 = d2t.cols();
    IntMatrix rel(n2, n2 + n1);
    for (long t = 0; t < n2; ++t) {
        std::vector<std::int64_t> u(n2, 0);
        u[t] = m;
        auto z = l_coords(u);
        for (long i = 0; i < n2; ++i)
            if (z[i] != 0) rel.set(i, t, z[i]);
    }
    for (long g = 0; g < n1; ++g) {
        std::vector<std::int64_t> u(n2, 0);
        d2t.for_each_nonzero([&](long i, long j, std::int64_t v) {
            if (j == g) u[i] = v;
        });
        auto z = l_coords(u);
        for (long i = 0; i < n2; ++i)
            if (z[i] != 0) rel.set(i, n2 + g, z[i]);
    }
    SnfOptions oR;
    oR.want_Uinv = true;
    auto sR = smith_normal_form(rel, oR);
    AbGroup h2 = sR.quotient_group(n2);

    // Generator cocycles: columns of V*diag(scale)*Uinv at torsion rows.
    std::vector<std::vector<std::int64_t>> vd(n2, std::vector<std::int64_t>(n2, 0));
    sA.V->for_each_nonzero([&](long i, long j, std::int64_t v) { vd[i][j] = v * scale[j]; });
    std::vector<std::vector<std::int64_t>> uinv(n2, std::vector<std::int64_t>(n2, 0));
    sR.Uinv->for_each_nonzero([&](long i, long j, std::int64_t v) { uinv[i][j] = v; });

    TwoCocycleBasis out;
    out.h2 = h2;
    CocycleTable zero;
    zero.modulus = m;
    zero.values.assign(q.n, std::vector<std::int64_t>(q.n, 0));
    out.cocycles.push_back(zero);
    for (long row = 0; row < sR.rank; ++row) {
        if (sR.factors[row] <= 1) continue;
        // lattice coords Uinv * e_row, then back to pair-function values
        CocycleTable tab;
        tab.modulus = m;
        tab.values.assign(q.n, std::vector<std::int64_t>(q.n, 0));
        for (long i = 0; i < n2; ++i) {
            std::int64_t acc = 0;
            for (long k = 0; k < n2; ++k) acc += vd[i][k] * uinv[k][row];
            acc = ((acc % m) + m) % m;
            if (acc != 0) {
                const auto& pair = basis2.tuple(i);
                tab.values[pair[0]][pair[1]] = acc;
            }
        }
        if (!is_quandle_two_cocycle(q, tab))
            throw ConsistencyError("two_cocycles produced a non-cocycle");
        out.cocycles.push_back(std::move(tab));
    }
    return out;
}

} // namespace ql
