#include "latchroma/catalog.hpp"

#include <algorithm>
#include <json.hpp>

#include "latchroma/normal_forms.hpp"

namespace latchroma {

namespace {

const char* leech_generator_json() {
    static const char kJson[] =
#include "latchroma_leech_data.inc"
        ;
    return kJson;
}

Lattice make_zn(int n) {
    return make_lattice(to_rational(IMat::identity(n)), "Z" + std::to_string(n));
}

Lattice make_an(int n) {
    QMat b(n, n + 1);
    for (int i = 0; i < n; ++i) {
        b(i, i) = 1;
        b(i, i + 1) = -1;
    }
    return make_lattice(b, "A" + std::to_string(n));
}

Lattice make_an_star(int n) {
    QMat b(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= n; ++j) b(i, j) = Rat(1, n + 1);
        b(i, i) -= 1;
    }
    Lattice l = make_lattice(b, "A" + std::to_string(n) + "*");
    return l;
}

Lattice make_dn(int n) {
    QMat b(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        b(i, i) = 1;
        b(i, i + 1) = -1;
    }
    b(n - 1, n - 2) = 1;
    b(n - 1, n - 1) = 1;
    return make_lattice(b, "D" + std::to_string(n));
}

Lattice make_dn_star(int n) {
    QMat b(n, n);
    for (int i = 0; i + 1 < n; ++i) b(i, i) = 1;
    for (int j = 0; j < n; ++j) b(n - 1, j) = Rat(1, 2);
    return make_lattice(b, "D" + std::to_string(n) + "*");
}

Lattice make_e8() {
    QMat gens(9, 8);
    // D8 rows
    for (int i = 0; i < 7; ++i) {
        gens(i, i) = 1;
        gens(i, i + 1) = -1;
    }
    gens(7, 6) = 1;
    gens(7, 7) = 1;
    for (int j = 0; j < 8; ++j) gens(8, j) = Rat(1, 2);
    Lattice l = lattice_from_generators(gens, "E8");
    return l;
}

// Integer kernel of the (rational) column conditions: rows y with
// y * conds == 0, where conds is dim x k.
IMat integer_kernel(const QMat& conds) {
    Int l(1);
    for (int i = 0; i < conds.rows(); ++i)
        for (int j = 0; j < conds.cols(); ++j) l = lcm_int(l, denom(conds(i, j)));
    IMat m(conds.rows(), conds.cols());
    for (int i = 0; i < conds.rows(); ++i)
        for (int j = 0; j < conds.cols(); ++j) m(i, j) = numer(conds(i, j) * Rat(l));
    SnfResult s = snf(m);
    // rows of u * m equal s * v^{-1}; zero rows of s give the kernel
    std::vector<int> zero_rows;
    for (int i = 0; i < s.s.rows(); ++i) {
        bool zero = true;
        for (int j = 0; j < s.s.cols(); ++j)
            if (s.s(i, j) != 0) zero = false;
        if (zero) zero_rows.push_back(i);
    }
    IMat k(static_cast<int>(zero_rows.size()), conds.rows());
    for (size_t r = 0; r < zero_rows.size(); ++r)
        for (int j = 0; j < conds.rows(); ++j) k(static_cast<int>(r), j) = s.u(zero_rows[r], j);
    return k;
}

Lattice section_of_e8(const std::vector<std::pair<int, int>>& equal_pairs, std::string name) {
    Lattice e8 = make_e8();
    QMat conds(8, static_cast<int>(equal_pairs.size()));
    for (size_t c = 0; c < equal_pairs.size(); ++c) {
        auto [a, b] = equal_pairs[c];
        // ambient condition x_a - x_b = 0 pulled back through the basis
        for (int i = 0; i < 8; ++i)
            conds(i, static_cast<int>(c)) = e8.basis(i, a) - e8.basis(i, b);
    }
    IMat k = integer_kernel(conds);
    QMat rows = mat_mul(to_rational(k), e8.basis);
    return make_lattice(rows, std::move(name));
}

Lattice make_e7() { return section_of_e8({{6, 7}}, "E7"); }

Lattice make_e6() { return section_of_e8({{5, 6}, {6, 7}}, "E6"); }

Lattice make_leech() {
    nlohmann::json j = nlohmann::json::parse(leech_generator_json());
    const auto& gen = j.at("generator");
    IMat m(24, 24);
    for (int i = 0; i < 24; ++i)
        for (int c = 0; c < 24; ++c) m(i, c) = Int(gen.at(i).at(c).get<long long>());
    // gram of the Leech lattice itself: M M^T / 8 (det 1, min norm 4)
    QMat gram(24, 24);
    for (int i = 0; i < 24; ++i)
        for (int c = 0; c < 24; ++c) {
            Int s(0);
            for (int k = 0; k < 24; ++k) s += m(i, k) * m(c, k);
            gram(i, c) = Rat(s, 8);
        }
    Lattice l = lattice_from_gram(gram, "Leech");
    l.meta.min_norm2 = Rat(4);
    l.meta.relevant_norm2 = std::vector<Rat>{Rat(4), Rat(6)};
    return l;
}

std::string normalize_name(std::string s) {
    std::string t;
    for (char c : s)
        if (c != ' ') t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto star = t.find("star");
    if (star != std::string::npos) t = t.substr(0, star) + "*";
    return t;
}

void require_n(const std::string& name, int n, int lo) {
    if (n < lo)
        throw Error(ErrorCode::BadDimension,
                    name + " needs n >= " + std::to_string(lo) + ", got " + std::to_string(n));
}

void require_fixed(const std::string& name, int n, int fixed) {
    if (n != 0 && n != fixed)
        throw Error(ErrorCode::BadDimension, name + " has fixed dimension " + std::to_string(fixed));
}

} // namespace

Lattice catalog(const std::string& name, int n) {
    std::string t = normalize_name(name);
    if (t == "z" || t == "zn") {
        require_n("Zn", n, 1);
        return make_zn(n);
    }
    if (t == "a" || t == "an") {
        require_n("An", n, 1);
        return make_an(n);
    }
    if (t == "a*" || t == "an*") {
        require_n("An*", n, 1);
        return make_an_star(n);
    }
    if (t == "d" || t == "dn") {
        require_n("Dn", n, 4);
        return make_dn(n);
    }
    if (t == "d*" || t == "dn*") {
        require_n("Dn*", n, 4);
        return make_dn_star(n);
    }
    if (t == "e6") {
        require_fixed("E6", n, 6);
        return make_e6();
    }
    if (t == "e7") {
        require_fixed("E7", n, 7);
        return make_e7();
    }
    if (t == "e8") {
        require_fixed("E8", n, 8);
        return make_e8();
    }
    if (t == "e6*") {
        require_fixed("E6*", n, 6);
        Lattice l = dual(make_e6());
        l.name = "E6*";
        return l;
    }
    if (t == "e7*") {
        require_fixed("E7*", n, 7);
        Lattice l = dual(make_e7());
        l.name = "E7*";
        return l;
    }
    if (t == "leech" || t == "lambda24") {
        require_fixed("Leech", n, 24);
        return make_leech();
    }
    throw Error(ErrorCode::UnknownName, "unknown catalog lattice '" + name + "'");
}

Lattice catalog_from_spec(const std::string& spec) {
    std::string s = spec;
    const std::string prefix = "catalog:";
    if (s.rfind(prefix, 0) == 0) s = s.substr(prefix.size());
    auto colon = s.find(':');
    if (colon == std::string::npos) return catalog(s, 0);
    std::string name = s.substr(0, colon);
    int n = 0;
    try {
        n = std::stoi(s.substr(colon + 1));
    } catch (const std::exception&) {
        throw Error(ErrorCode::BadInput, "bad catalog spec '" + spec + "'");
    }
    return catalog(name, n);
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "Z", "A", "A*", "D", "D*", "E6", "E6*", "E7", "E7*", "E8", "Leech"};
    return names;
}

} // namespace latchroma
