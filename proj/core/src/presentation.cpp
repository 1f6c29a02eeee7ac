#include "quandlelab/presentation.hpp"

#include <json.hpp>

#include <cmath>

#include "quandlelab/errors.hpp"
#include "quandlelab/snf.hpp"

namespace ql {

Word free_reduce(const Word& w) {
    Word out;
    for (int s : w) {
        if (s == 0) throw InputError("word letter 0");
        if (!out.empty() && out.back() == -s) out.pop_back();
        else out.push_back(s);
    }
    return out;
}

Word inverse_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& s : out) s = -s;
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(out);
}

void Presentation::add_relator(const Word& w) {
    Word r = free_reduce(w);
    if (!r.empty()) relators.push_back(std::move(r));
}

void Presentation::validate() const {
    for (auto& r : relators)
        for (int s : r)
            if (s == 0 || std::abs(s) > num_generators)
                throw InputError("relator letter out of range");
}

std::string Presentation::to_json() const {
    nlohmann::json j;
    j["gens"] = num_generators;
    j["relators"] = relators;
    return j.dump();
}

Presentation Presentation::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Presentation p;
    p.num_generators = j.at("gens").get<int>();
    for (auto& r : j.at("relators")) p.add_relator(r.get<Word>());
    p.validate();
    return p;
}

IntMatrix relation_matrix(const Presentation& p) {
    IntMatrix m(p.num_generators, long(p.relators.size()));
    for (size_t c = 0; c < p.relators.size(); ++c)
        for (int s : p.relators[c]) m.add(std::abs(s) - 1, long(c), s > 0 ? 1 : -1);
    return m;
}

AbelianizedGroup::AbelianizedGroup(const Presentation& p) : num_generators_(p.num_generators) {
    p.validate();
    SnfOptions o;
    o.want_U = true;
    auto s = smith_normal_form(relation_matrix(p), o);
    u_ = *s.U;
    std::vector<std::int64_t> torsion;
    for (long i = 0; i < s.rank; ++i)
        if (s.factors[i] > 1) {
            torsion_rows_.push_back({i, s.factors[i]});
            torsion.push_back(s.factors[i]);
        }
    for (long i = s.rank; i < p.num_generators; ++i) free_rows_.push_back(i);
    group_ = AbGroup(long(free_rows_.size()), torsion);
}

std::vector<std::int64_t> AbelianizedGroup::coords_of(const Word& w) const {
    std::vector<std::int64_t> x(num_generators_, 0);
    for (int s : w) {
        int g = std::abs(s) - 1;
        if (g < 0 || g >= num_generators_) throw InputError("word letter out of range");
        x[g] += s > 0 ? 1 : -1;
    }
    std::vector<std::int64_t> y(num_generators_, 0);
    u_.for_each_nonzero([&](long i, long j, std::int64_t v) { y[i] += v * x[j]; });
    std::vector<std::int64_t> out;
    for (long r : free_rows_) out.push_back(y[r]);
    for (auto& [r, d] : torsion_rows_) out.push_back(((y[r] % d) + d) % d);
    return out;
}

std::vector<std::int64_t> AbelianizedGroup::generator_coords(int gen) const {
    return coords_of({gen});
}

AbGroup abelianize_presentation(const Presentation& p) {
    p.validate();
    auto s = smith_normal_form(relation_matrix(p));
    return s.quotient_group(p.num_generators);
}

} // namespace ql
