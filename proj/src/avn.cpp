#include "ctxkit/avn.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace ctxkit {

const PauliWord& AVNSystem::atom(const std::string& id) const {
    for (const auto& [name, word] : atoms)
        if (name == id) return word;
    throw DomainError("unregistered atom '" + id + "'");
}

PauliWord AVNSystem::clause_product(const AVNClause& c) const {
    if (c.factors.empty()) throw DomainError("clause with no factors");
    PauliWord w = atom(c.factors.front());
    for (size_t k = 1; k < c.factors.size(); ++k) w = pauli_multiply(w, atom(c.factors[k]));
    return w;
}

void validate_avn_system(const AVNSystem& sys) {
    if (sys.atoms.empty()) throw DomainError("system registers no atoms");
    for (size_t i = 0; i < sys.atoms.size(); ++i) {
        if (sys.atoms[i].second.n != sys.n_qubits)
            throw DomainError("atom '" + sys.atoms[i].first + "' has the wrong qubit count");
        for (size_t j = i + 1; j < sys.atoms.size(); ++j)
            if (sys.atoms[i].first == sys.atoms[j].first)
                throw DomainError("atom '" + sys.atoms[i].first + "' registered twice");
    }
    if (sys.clauses.empty()) throw DomainError("system has no clauses");
    for (const AVNClause& c : sys.clauses) {
        if (c.asserted_value != 1 && c.asserted_value != -1)
            throw DomainError("clause asserts a value other than +-1");
        for (size_t i = 0; i < c.factors.size(); ++i) {
            const PauliWord& a = sys.atom(c.factors[i]);
            for (size_t j = i + 1; j < c.factors.size(); ++j)
                if (!commutes(a, sys.atom(c.factors[j])))
                    throw DomainError("clause factors '" + c.factors[i] + "' and '" +
                                      c.factors[j] + "' do not commute");
        }
    }
}

AVNVerdict avn_parity_check(const AVNSystem& sys) {
    validate_avn_system(sys);
    const size_t na = sys.atoms.size();
    if (na > 64) throw DomainError("too many atoms for the parity solver");
    auto atom_index = [&](const std::string& id) -> size_t {
        for (size_t k = 0; k < na; ++k)
            if (sys.atoms[k].first == id) return k;
        throw DomainError("unregistered atom '" + id + "'");
    };

    AVNVerdict v;
    std::vector<int> occurrence(na, 0);
    v.asserted_product = 1;
    struct Row { std::uint64_t mask; int rhs; };
    std::vector<Row> rows;
    for (const AVNClause& c : sys.clauses) {
        Row r{0, c.asserted_value == -1 ? 1 : 0};
        for (const std::string& f : c.factors) {
            size_t idx = atom_index(f);
            r.mask ^= std::uint64_t{1} << idx;   // atom twice in one clause squares away
            ++occurrence[idx];
        }
        rows.push_back(r);
        v.asserted_product *= c.asserted_value;
    }
    v.all_atoms_even = std::all_of(occurrence.begin(), occurrence.end(),
                                   [](int c) { return c % 2 == 0; });

    // Gaussian elimination over GF(2).
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < na && rank < rows.size(); ++col) {
        size_t sel = rows.size();
        for (size_t r = rank; r < rows.size(); ++r)
            if ((rows[r].mask >> col) & 1) { sel = r; break; }
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && ((rows[r].mask >> col) & 1)) {
                rows[r].mask ^= rows[rank].mask;
                rows[r].rhs ^= rows[rank].rhs;
            }
        }
        pivot_col.push_back(static_cast<int>(col));
        ++rank;
    }
    for (size_t r = rank; r < rows.size(); ++r)
        if (rows[r].rhs) { v.contradiction = true; return v; }

    // Back out a particular solution: free variables set to +1.
    std::vector<int> bits(na, 0);
    for (size_t r = 0; r < rank; ++r) {
        int col = pivot_col[r];
        int val = rows[r].rhs;
        for (size_t c = static_cast<size_t>(col) + 1; c < na; ++c)
            if ((rows[r].mask >> c) & 1) val ^= bits[c];
        bits[static_cast<size_t>(col)] = val;
    }
    for (size_t k = 0; k < na; ++k) v.model[sys.atoms[k].first] = bits[k] ? -1 : 1;
    return v;
}

double avn_sum_value(const AVNSystem& sys, const DensityMatrix& rho) {
    double total = 0.0;
    for (const AVNClause& c : sys.clauses)
        total += c.asserted_value * stabilizer_expectation(rho, sys.clause_product(c));
    return total;
}

int avn_classical_bound(const AVNSystem& sys) {
    const size_t na = sys.atoms.size();
    if (na > 20) throw DomainError("too many atoms for exhaustive enumeration");
    auto atom_index = [&](const std::string& id) -> size_t {
        for (size_t k = 0; k < na; ++k)
            if (sys.atoms[k].first == id) return k;
        throw DomainError("unregistered atom '" + id + "'");
    };
    std::vector<std::vector<size_t>> clause_idx;
    for (const AVNClause& c : sys.clauses) {
        std::vector<size_t> idx;
        for (const std::string& f : c.factors) idx.push_back(atom_index(f));
        clause_idx.push_back(std::move(idx));
    }
    int best = std::numeric_limits<int>::min();
    for (std::uint32_t mask = 0; mask < (1u << na); ++mask) {
        int total = 0;
        for (size_t c = 0; c < sys.clauses.size(); ++c) {
            int prod = sys.clauses[c].asserted_value;
            for (size_t idx : clause_idx[c])
                if ((mask >> idx) & 1) prod = -prod;
            total += prod;
        }
        best = std::max(best, total);
    }
    return best;
}

namespace {

AVNSystem build_system(std::string name, int n,
                       std::initializer_list<std::pair<const char*, const char*>> atoms,
                       std::initializer_list<std::pair<std::vector<std::string>, int>> clauses) {
    AVNSystem sys;
    sys.name = std::move(name);
    sys.n_qubits = n;
    for (const auto& [id, word] : atoms) sys.atoms.emplace_back(id, PauliWord::from_string(word));
    for (const auto& [factors, value] : clauses) sys.clauses.push_back(AVNClause{factors, value});
    validate_avn_system(sys);
    return sys;
}

} // namespace

AVNSystem builtin_avn(const std::string& name) {
    if (name == "avn_cabello01") {
        return build_system(
            name, 4,
            {{"z1", "Z.I.I.I"}, {"z2", "I.Z.I.I"}, {"z3", "I.I.Z.I"}, {"z4", "I.I.I.Z"},
             {"x1", "X.I.I.I"}, {"x2", "I.X.I.I"}, {"x3", "I.I.X.I"}, {"x4", "I.I.I.X"},
             {"z1z3", "Z.I.Z.I"}, {"x1x3", "X.I.X.I"}, {"z2x4", "I.Z.I.X"}, {"x2z4", "I.X.I.Z"}},
            {{{"z1", "z2"}, -1},
             {{"z3", "z4"}, -1},
             {{"x1", "x2"}, -1},
             {{"x3", "x4"}, -1},
             {{"z1z3", "z2", "z4"}, +1},
             {{"x1x3", "x2", "x4"}, +1},
             {{"z2x4", "z1", "x3"}, +1},
             {{"x2z4", "x1", "z3"}, +1},
             {{"z1z3", "x1x3", "z2x4", "x2z4"}, -1}});
    }
    if (name == "phip_huang03") {
        return build_system(name, 2,
                            {{"x1", "X.I"}, {"x2", "I.X"}, {"z1", "Z.I"}, {"z2", "I.Z"},
                             {"xz", "X.Z"}, {"zx", "Z.X"}},
                            {{{"x1", "x2"}, +1},
                             {{"z1", "z2"}, +1},
                             {{"xz", "x1", "z2"}, +1},
                             {{"zx", "z1", "x2"}, +1},
                             {{"xz", "zx"}, -1}});
    }
    if (name == "peres_mermin") {
        return build_system(name, 2,
                            {{"A", "I.Z"}, {"B", "Z.I"}, {"C", "Z.Z"},
                             {"a", "X.I"}, {"b", "I.X"}, {"c", "X.X"},
                             {"alpha", "X.Z"}, {"beta", "Z.X"}, {"gamma", "Y.Y"}},
                            {{{"C", "A", "B"}, +1},
                             {{"c", "b", "a"}, +1},
                             {{"beta", "gamma", "alpha"}, +1},
                             {{"alpha", "A", "a"}, +1},
                             {{"beta", "b", "B"}, +1},
                             {{"c", "gamma", "C"}, -1}});
    }
    if (name == "bell_stabilizer") {
        return build_system(name, 2, {{"g1", "X.X"}, {"g2", "Z.Z"}, {"g3", "Y.Y"}},
                            {{{"g1"}, +1}, {{"g2"}, +1}, {{"g3"}, -1}, {{"g1", "g2", "g3"}, -1}});
    }
    throw DomainError("unknown builtin parity system '" + name + "'");
}

DensityMatrix bell_phi_plus() {
    std::vector<cplx> amp(4, cplx(0.0));
    amp[0] = 1.0 / std::sqrt(2.0);
    amp[3] = 1.0 / std::sqrt(2.0);
    return make_pure_state(amp);
}

DensityMatrix bell_psi_minus_adjacent() {
    // Singlet pairs on (qubit0, qubit1) and (qubit2, qubit3): the arrangement
    // whose stabilizers are the first four parity clauses of avn_cabello01.
    const double s = 1.0 / std::sqrt(2.0);
    const double psim[4] = {0.0, s, -s, 0.0};   // amplitudes of |ab> for one pair
    std::vector<cplx> amp(16, cplx(0.0));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    amp[static_cast<size_t>(8 * a + 4 * b + 2 * c + d)] =
                        psim[2 * a + b] * psim[2 * c + d];
    return make_pure_state(amp);
}

DensityMatrix bell_psi_minus_crossed() {
    // Singlet pairs across (qubit0, qubit2) and (qubit1, qubit3): each party in
    // the (0,1) vs (2,3) split holds one half of both singlets, which is what
    // the activation correlations need.
    const double s = 1.0 / std::sqrt(2.0);
    const double psim[4] = {0.0, s, -s, 0.0};
    std::vector<cplx> amp(16, cplx(0.0));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    amp[static_cast<size_t>(8 * a + 4 * b + 2 * c + d)] =
                        psim[2 * a + c] * psim[2 * b + d];
    return make_pure_state(amp);
}

DensityMatrix avn_designated_state(const std::string& name) {
    if (name == "avn_cabello01") return bell_psi_minus_adjacent();
    if (name == "phip_huang03") return bell_phi_plus();
    if (name == "peres_mermin") return DensityMatrix::maximally_mixed(4);
    if (name == "bell_stabilizer") return bell_phi_plus();
    throw DomainError("unknown builtin parity system '" + name + "'");
}

namespace {

std::string trim_ws(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

AVNSystem parse_avn(std::istream& in, const std::string& display_name) {
    AVNSystem sys;
    sys.name = display_name;
    enum class Section { none, atoms, clauses } section = Section::none;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim_ws(line);
        if (line.empty()) continue;
        if (line == "atoms:") { section = Section::atoms; continue; }
        if (line == "clauses:") { section = Section::clauses; continue; }
        if (section == Section::atoms) {
            size_t eq = line.find('=');
            if (eq == std::string::npos) throw ParseError("expected 'name = WORD'", line_no);
            std::string id = trim_ws(line.substr(0, eq));
            std::string word = trim_ws(line.substr(eq + 1));
            if (id.empty()) throw ParseError("empty atom name", line_no);
            PauliWord w;
            try {
                w = PauliWord::from_string(word);
            } catch (const Error& e) {
                throw ParseError(std::string(e.what()), line_no);
            }
            if (sys.atoms.empty()) sys.n_qubits = w.n;
            sys.atoms.emplace_back(id, w);
        } else if (section == Section::clauses) {
            size_t open = line.find('['), close = line.find(']');
            size_t eq = line.find('=', close == std::string::npos ? 0 : close);
            if (open == std::string::npos || close == std::string::npos || eq == std::string::npos)
                throw ParseError("expected '[a, b, ...] = +-1'", line_no);
            AVNClause c;
            std::string inner = line.substr(open + 1, close - open - 1);
            std::istringstream items(inner);
            std::string item;
            while (std::getline(items, item, ',')) {
                item = trim_ws(item);
                if (item.empty()) throw ParseError("empty clause factor", line_no);
                c.factors.push_back(item);
            }
            if (c.factors.empty()) throw ParseError("clause lists no factors", line_no);
            std::string val = trim_ws(line.substr(eq + 1));
            if (val == "1" || val == "+1") c.asserted_value = 1;
            else if (val == "-1") c.asserted_value = -1;
            else throw ParseError("clause value must be +1 or -1, got '" + val + "'", line_no);
            sys.clauses.push_back(std::move(c));
        } else {
            throw ParseError("content before any section header", line_no);
        }
    }
    try {
        validate_avn_system(sys);
    } catch (const Error& e) {
        throw ParseError(std::string(e.what()));
    }
    return sys;
}

AVNSystem parse_avn_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open parity system file '" + path + "'");
    return parse_avn(in, path);
}

std::string serialize_avn(const AVNSystem& sys) {
    std::ostringstream os;
    os << "atoms:\n";
    for (const auto& [id, word] : sys.atoms) os << id << " = " << word.str() << "\n";
    os << "clauses:\n";
    for (const AVNClause& c : sys.clauses) {
        os << "[";
        for (size_t k = 0; k < c.factors.size(); ++k) {
            if (k) os << ", ";
            os << c.factors[k];
        }
        os << "] = " << (c.asserted_value > 0 ? "+1" : "-1") << "\n";
    }
    return os.str();
}

namespace {

// Peres-Mermin square observables on two qubits, and the six signed contexts.
struct PMData {
    std::vector<std::string> names;       // A B C a b c alpha beta gamma
    std::vector<CMatrix> mats;
    struct Context { int i, j, k; int sign; };
    std::vector<Context> contexts;        // five +1 rows/columns, one -1
    struct STerm { int obs; int ctx; };
    std::vector<STerm> s_terms;           // twelve cross-correlation slots

    int index(const std::string& n) const {
        for (size_t k = 0; k < names.size(); ++k)
            if (names[k] == n) return static_cast<int>(k);
        throw DomainError("unknown square observable '" + n + "'");
    }
};

const PMData& pm_data() {
    static const PMData data = [] {
        PMData d;
        const std::pair<const char*, const char*> defs[9] = {
            {"A", "I.Z"}, {"B", "Z.I"}, {"C", "Z.Z"}, {"a", "X.I"}, {"b", "I.X"},
            {"c", "X.X"}, {"alpha", "X.Z"}, {"beta", "Z.X"}, {"gamma", "Y.Y"}};
        for (const auto& [n, w] : defs) {
            d.names.emplace_back(n);
            d.mats.push_back(PauliWord::from_string(w).matrix());
        }
        auto ctx = [&](const char* x, const char* y, const char* z, int sign) {
            d.contexts.push_back({d.index(x), d.index(y), d.index(z), sign});
        };
        ctx("C", "A", "B", +1);
        ctx("c", "b", "a", +1);
        ctx("beta", "gamma", "alpha", +1);
        ctx("alpha", "A", "a", +1);
        ctx("beta", "b", "B", +1);
        ctx("c", "gamma", "C", -1);
        auto st = [&](const char* obs, int ctx_idx) {
            d.s_terms.push_back({d.index(obs), ctx_idx});
        };
        st("A", 0); st("B", 0);
        st("b", 1); st("a", 1);
        st("gamma", 2); st("alpha", 2);
        st("A", 3); st("a", 3);
        st("b", 4); st("B", 4);
        st("gamma", 5); st("C", 5);
        return d;
    }();
    return data;
}

} // namespace

double peres_mermin_chi(const DensityMatrix& rho) {
    if (rho.dim != 4) throw DimensionError("square value needs a two-qubit state");
    const PMData& d = pm_data();
    double total = 0.0;
    for (const auto& c : d.contexts) {
        CMatrix prod = d.mats[static_cast<size_t>(c.i)] * d.mats[static_cast<size_t>(c.j)] *
                       d.mats[static_cast<size_t>(c.k)];
        total += c.sign * expectation(rho, prod);
    }
    return total;
}

int peres_mermin_classical_bound() {
    const PMData& d = pm_data();
    int best = std::numeric_limits<int>::min();
    for (int mask = 0; mask < (1 << 9); ++mask) {
        int v[9];
        for (int k = 0; k < 9; ++k) v[k] = (mask >> k) & 1 ? -1 : 1;
        int total = 0;
        for (const auto& c : d.contexts) total += c.sign * v[c.i] * v[c.j] * v[c.k];
        best = std::max(best, total);
    }
    return best;
}

namespace {

DensityMatrix first_party_marginal(const DensityMatrix& xi) {
    CMatrix m = CMatrix::zero(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) m(i, j) += xi.matrix(4 * i + k, 4 * j + k);
    return DensityMatrix::from_matrix(m);
}

double cross_correlation(const DensityMatrix& xi, const CMatrix& obs) {
    CMatrix both = kron(obs, obs);
    return expectation(xi, both);
}

} // namespace

ActivationBreakdown activation_breakdown(const DensityMatrix& xi) {
    if (xi.dim != 16) throw DimensionError("activation witness needs a four-qubit state");
    const PMData& d = pm_data();
    ActivationBreakdown out;
    out.chi = peres_mermin_chi(first_party_marginal(xi));
    for (const auto& term : d.s_terms)
        out.s_terms.push_back(std::abs(cross_correlation(xi, d.mats[static_cast<size_t>(term.obs)])));
    out.omega = out.chi;
    for (double s : out.s_terms) out.omega += s;
    return out;
}

double activation_omega(const DensityMatrix& xi) { return activation_breakdown(xi).omega; }

int activation_lhv_bound() {
    const PMData& d = pm_data();
    int best = std::numeric_limits<int>::min();
    for (int am = 0; am < (1 << 9); ++am) {
        int av[9];
        for (int k = 0; k < 9; ++k) av[k] = (am >> k) & 1 ? -1 : 1;
        int chi = 0;
        for (const auto& c : d.contexts) chi += c.sign * av[c.i] * av[c.j] * av[c.k];
        for (int bm = 0; bm < (1 << 9); ++bm) {
            int bv[9];
            for (int k = 0; k < 9; ++k) bv[k] = (bm >> k) & 1 ? -1 : 1;
            int total = chi;
            for (const auto& term : d.s_terms) total += std::abs(av[term.obs] * bv[term.obs]);
            best = std::max(best, total);
        }
    }
    return best;
}

double activation_no_signaling_residual(const DensityMatrix& xi) {
    if (xi.dim != 16) throw DimensionError("activation witness needs a four-qubit state");
    const PMData& d = pm_data();
    const CMatrix id4 = CMatrix::identity(4);
    double worst = 0.0;
    for (const auto& term : d.s_terms) {
        const auto& ctx = d.contexts[static_cast<size_t>(term.ctx)];
        const CMatrix& O = d.mats[static_cast<size_t>(term.obs)];
        // Joint eigenprojectors of the commuting context triple.
        std::vector<CMatrix> projs;
        for (int s = 0; s < 8; ++s) {
            CMatrix p = id4;
            const int obs_idx[3] = {ctx.i, ctx.j, ctx.k};
            for (int t = 0; t < 3; ++t) {
                double sign = (s >> t) & 1 ? -1.0 : 1.0;
                CMatrix half = 0.5 * (id4 + sign * d.mats[static_cast<size_t>(obs_idx[t])]);
                p = p * half;
            }
            if (p.max_abs() > 1e-12) projs.push_back(p);
        }
        CMatrix dephased = CMatrix::zero(16, 16);
        for (const CMatrix& p : projs) {
            CMatrix big = kron(p, id4);
            dephased = dephased + big * xi.matrix * big;
        }
        double before = expectation(xi, kron(O, O));
        cplx after = (kron(O, O) * dephased).trace();
        worst = std::max(worst, std::abs(before - after.real()));
        worst = std::max(worst, std::abs(after.imag()));
    }
    return worst;
}

} // namespace ctxkit
