#include "ctxkit/rays.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ctxkit {

bool Ray::is_zero() const {
    if (exact) {
        for (const auto& e : exact_entries)
            if (!e.is_zero()) return false;
        return true;
    }
    for (const auto& e : float_entries)
        if (std::abs(e) > 0.0) return false;
    return true;
}

Ray Ray::from_ints(std::string label, const std::vector<std::int64_t>& v) {
    Ray r;
    r.label = std::move(label);
    r.dim = static_cast<int>(v.size());
    r.exact = true;
    for (std::int64_t x : v) r.exact_entries.emplace_back(Rational(x));
    return r;
}

Ray Ray::from_floats(std::string label, const std::vector<cplx>& v) {
    Ray r;
    r.label = std::move(label);
    r.dim = static_cast<int>(v.size());
    r.exact = false;
    r.float_entries = v;
    return r;
}

namespace {

// Projective equality. Exact pair: all 2x2 cross determinants vanish.
// Floating pair: |<a|b>| equals |a||b| to within 1e-9 relative.
bool parallel(const Ray& a, const Ray& b) {
    if (a.dim != b.dim) return false;
    if (a.exact && b.exact) {
        for (int i = 0; i < a.dim; ++i)
            for (int j = i + 1; j < a.dim; ++j) {
                GaussianRational det =
                    a.exact_entries[i] * b.exact_entries[j] - a.exact_entries[j] * b.exact_entries[i];
                if (!det.is_zero()) return false;
            }
        return true;
    }
    cplx ip = 0.0;
    double na = 0.0, nb = 0.0;
    for (int i = 0; i < a.dim; ++i) {
        ip += std::conj(a.entry(i)) * b.entry(i);
        na += std::norm(a.entry(i));
        nb += std::norm(b.entry(i));
    }
    return std::abs(std::abs(ip) - std::sqrt(na * nb)) <= 1e-9 * std::sqrt(na * nb);
}

} // namespace

RaySet RaySet::create(std::string name, std::vector<Ray> rays) {
    if (rays.empty()) throw DomainError("empty ray set");
    const int d = rays.front().dim;
    for (const Ray& r : rays) {
        if (r.dim != d)
            throw DimensionError("ray '" + r.label + "' has dimension " + std::to_string(r.dim) +
                                 ", expected " + std::to_string(d));
        if (r.is_zero()) throw DomainError("ray '" + r.label + "' is zero");
    }
    for (size_t i = 0; i < rays.size(); ++i)
        for (size_t j = i + 1; j < rays.size(); ++j)
            if (parallel(rays[i], rays[j]))
                throw DomainError("rays '" + rays[i].label + "' and '" + rays[j].label +
                                  "' are scalar multiples of each other");
    RaySet rs;
    rs.name = std::move(name);
    rs.dim = d;
    rs.rays = std::move(rays);
    return rs;
}

cplx inner_product(const Ray& a, const Ray& b) {
    if (a.dim != b.dim) throw DimensionError("inner product dimension mismatch");
    if (a.exact && b.exact) {
        GaussianRational acc;
        for (int i = 0; i < a.dim; ++i)
            acc = acc + a.exact_entries[i].conj() * b.exact_entries[i];
        return acc.to_complex();
    }
    cplx acc = 0.0;
    for (int i = 0; i < a.dim; ++i) acc += std::conj(a.entry(i)) * b.entry(i);
    return acc;
}

bool exactly_orthogonal(const Ray& a, const Ray& b) {
    if (!(a.exact && b.exact)) throw DomainError("exact orthogonality needs exact rays");
    GaussianRational acc;
    for (int i = 0; i < a.dim; ++i)
        acc = acc + a.exact_entries[i].conj() * b.exact_entries[i];
    return acc.is_zero();
}

Graph exclusivity_graph(const RaySet& rs, double tol) {
    if (tol < 0.0) throw DomainError("negative tolerance");
    Graph g = Graph::empty(static_cast<int>(rs.rays.size()));
    for (size_t i = 0; i < rs.rays.size(); ++i) g.labels.push_back(rs.rays[i].label);
    for (size_t i = 0; i < rs.rays.size(); ++i) {
        for (size_t j = i + 1; j < rs.rays.size(); ++j) {
            const Ray& a = rs.rays[i];
            const Ray& b = rs.rays[j];
            bool edge;
            if (a.exact && b.exact) {
                edge = exactly_orthogonal(a, b);
            } else {
                const double na = std::sqrt(inner_product(a, a).real());
                const double nb = std::sqrt(inner_product(b, b).real());
                edge = std::abs(inner_product(a, b)) <= tol * na * nb;
            }
            if (edge) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return g;
}

Graph exclusivity_graph(const RaySet& rs) {
    return exclusivity_graph(rs, tolerances().float_edge);
}

std::vector<Basis> enumerate_bases(const RaySet& rs) {
    const Graph g = exclusivity_graph(rs);
    const int d = rs.dim;
    const int n = g.n;
    std::vector<Basis> out;
    // d <= 4 for every set in use, so a direct lexicographic scan over
    // d-subsets restricted by adjacency is plenty fast.
    std::vector<int> pick;
    auto extend = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == d) {
            out.push_back(Basis{pick});
            return;
        }
        for (int v = from; v < n; ++v) {
            bool ok = true;
            for (int u : pick)
                if (!g.has_edge(u, v)) { ok = false; break; }
            if (!ok) continue;
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

Projector projector_of(const Ray& r) {
    if (r.is_zero()) throw DomainError("zero ray has no projector");
    std::vector<cplx> v(r.dim);
    for (int i = 0; i < r.dim; ++i) v[i] = r.entry(i);
    return Projector::onto_unit_vector(v);
}

namespace {

RaySet make_cabello18() {
    // 18 rays in dimension 4, 0/+-1 entries, listed in first-appearance
    // order of the nine 4-ray contexts; every ray belongs to exactly two.
    static const std::int64_t raw[18][4] = {
        {1, 0, 0, 0}, {0, 0, 1, -1}, {0, 0, 1, 1},  {0, 1, 0, 0},
        {0, 1, -1, 0}, {0, 0, 0, 1}, {0, 1, 1, 0},  {-1, 1, 1, 1},
        {1, 1, 1, -1}, {1, 0, 0, 1}, {0, 1, 0, -1}, {1, 1, -1, 1},
        {1, 0, 1, 0},  {1, 1, 1, 1}, {1, 0, -1, 0}, {1, -1, 1, -1},
        {1, -1, 0, 0}, {1, 1, -1, -1}};
    std::vector<Ray> rays;
    for (int k = 0; k < 18; ++k) {
        std::string label = "u" + std::to_string(k + 1);
        rays.push_back(Ray::from_ints(label, {raw[k][0], raw[k][1], raw[k][2], raw[k][3]}));
    }
    return RaySet::create("cabello18", std::move(rays));
}

RaySet make_yu_oh13() {
    // Cube geometry: face diagonals h, edge-midpoint directions y+-, axes z.
    // Index order h0..h3, y1-..y3-, y1+..y3+, z1..z3 is load-bearing for the
    // inequality evaluation and pinned by tests.
    struct Spec { const char* label; std::int64_t e[3]; };
    static const Spec spec[13] = {
        {"h0", {1, 1, 1}},  {"h1", {-1, 1, 1}}, {"h2", {1, -1, 1}}, {"h3", {1, 1, -1}},
        {"y1m", {0, 1, -1}}, {"y2m", {-1, 0, 1}}, {"y3m", {1, -1, 0}},
        {"y1p", {0, 1, 1}},  {"y2p", {1, 0, 1}},  {"y3p", {1, 1, 0}},
        {"z1", {1, 0, 0}},   {"z2", {0, 1, 0}},   {"z3", {0, 0, 1}}};
    std::vector<Ray> rays;
    for (const Spec& s : spec) rays.push_back(Ray::from_ints(s.label, {s.e[0], s.e[1], s.e[2]}));
    return RaySet::create("yu_oh13", std::move(rays));
}

RaySet make_kcbs5() {
    // An exact 5-cycle orthogonal representation: adjacent rays orthogonal,
    // nothing else is, so the exclusivity graph is the pentagon.
    static const std::int64_t raw[5][3] = {
        {1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, -1}, {0, 1, 1}};
    std::vector<Ray> rays;
    for (int k = 0; k < 5; ++k) {
        rays.push_back(Ray::from_ints("v" + std::to_string(k), {raw[k][0], raw[k][1], raw[k][2]}));
    }
    return RaySet::create("kcbs5", std::move(rays));
}

} // namespace

RaySet builtin_rayset(const std::string& name) {
    if (name == "cabello18") return make_cabello18();
    if (name == "yu_oh13") return make_yu_oh13();
    if (name == "kcbs5") return make_kcbs5();
    throw DomainError("unknown builtin ray set '" + name + "'");
}

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// One scalar: integer, integer/integer, a+bi with integer parts, or a
// decimal float. Returns false into `exact` when a decimal was seen.
struct ParsedEntry {
    GaussianRational exact_value;
    cplx float_value;
    bool exact = true;
};

bool parse_int(const std::string& s, std::int64_t& out) {
    if (s.empty()) return false;
    size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') { neg = s[pos] == '-'; ++pos; }
    if (pos >= s.size()) return false;
    std::int64_t v = 0;
    for (; pos < s.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
        v = v * 10 + (s[pos] - '0');
    }
    out = neg ? -v : v;
    return true;
}

ParsedEntry parse_entry(const std::string& raw, int line_no) {
    const std::string s = trim(raw);
    if (s.empty()) throw ParseError("empty ray entry", line_no);
    ParsedEntry pe;

    // a+bi / a-bi (imaginary tail present)?
    if (s.back() == 'i' || s.back() == 'I') {
        std::string body = s.substr(0, s.size() - 1);
        // Split the imaginary coefficient from an optional real head at the
        // last +/- that is not the leading sign.
        size_t split = std::string::npos;
        for (size_t k = body.size(); k-- > 1;) {
            if (body[k] == '+' || body[k] == '-') { split = k; break; }
        }
        std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
        std::string im_part = split == std::string::npos ? body : body.substr(split);
        if (im_part.empty() || im_part == "+") im_part = "1";
        else if (im_part == "-") im_part = "-1";
        std::int64_t re = 0, im = 0;
        if (!re_part.empty() && !parse_int(trim(re_part), re))
            throw ParseError("bad real part '" + re_part + "'", line_no);
        if (!parse_int(trim(im_part), im))
            throw ParseError("bad imaginary part '" + im_part + "'", line_no);
        pe.exact_value = GaussianRational(Rational(re), Rational(im));
        return pe;
    }

    // a/b ?
    size_t slash = s.find('/');
    if (slash != std::string::npos) {
        std::int64_t num = 0, den = 0;
        if (!parse_int(trim(s.substr(0, slash)), num) || !parse_int(trim(s.substr(slash + 1)), den) ||
            den == 0)
            throw ParseError("bad rational entry '" + s + "'", line_no);
        pe.exact_value = GaussianRational(Rational(num, den));
        return pe;
    }

    // plain integer?
    std::int64_t v = 0;
    if (parse_int(s, v)) {
        pe.exact_value = GaussianRational(Rational(v));
        return pe;
    }

    // decimal float
    try {
        size_t used = 0;
        double d = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing");
        pe.exact = false;
        pe.float_value = cplx(d, 0.0);
        return pe;
    } catch (const std::exception&) {
        throw ParseError("unparseable ray entry '" + s + "'", line_no);
    }
}

} // namespace

RaySet parse_rayset(std::istream& in, const std::string& display_name) {
    std::string line;
    int line_no = 0;
    int dim = 0;
    bool have_dim = false;
    struct PendingRay {
        std::string label;
        std::vector<ParsedEntry> entries;
        int line_no;
    };
    std::vector<PendingRay> pending;

    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (!have_dim) {
            std::istringstream head(line);
            std::string kw;
            head >> kw >> dim;
            if (kw != "dim" || head.fail() || dim < 1)
                throw ParseError("expected 'dim <d>' header, got '" + line + "'", line_no);
            have_dim = true;
            continue;
        }
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'label: (e1, ..., ed)'", line_no);
        std::string label = trim(line.substr(0, colon));
        std::string rest = trim(line.substr(colon + 1));
        if (label.empty()) throw ParseError("empty ray label", line_no);
        if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
            throw ParseError("ray entries must be parenthesized", line_no);
        rest = rest.substr(1, rest.size() - 2);
        PendingRay pr;
        pr.label = label;
        pr.line_no = line_no;
        std::string item;
        std::istringstream items(rest);
        while (std::getline(items, item, ',')) pr.entries.push_back(parse_entry(item, line_no));
        if (static_cast<int>(pr.entries.size()) != dim)
            throw ParseError("ray '" + label + "' has " + std::to_string(pr.entries.size()) +
                                 " entries, expected " + std::to_string(dim),
                             line_no);
        pending.push_back(std::move(pr));
    }
    if (!have_dim) throw ParseError("missing 'dim <d>' header");
    if (pending.empty()) throw ParseError("ray file lists no rays");

    const bool all_exact = std::all_of(pending.begin(), pending.end(), [](const PendingRay& pr) {
        return std::all_of(pr.entries.begin(), pr.entries.end(),
                           [](const ParsedEntry& e) { return e.exact; });
    });
    std::vector<Ray> rays;
    for (const PendingRay& pr : pending) {
        Ray r;
        r.label = pr.label;
        r.dim = dim;
        r.exact = all_exact;
        if (all_exact) {
            for (const ParsedEntry& e : pr.entries) r.exact_entries.push_back(e.exact_value);
        } else {
            for (const ParsedEntry& e : pr.entries)
                r.float_entries.push_back(e.exact ? e.exact_value.to_complex() : e.float_value);
        }
        if (r.is_zero()) throw ParseError("ray '" + pr.label + "' is zero", pr.line_no);
        rays.push_back(std::move(r));
    }
    return RaySet::create(display_name, std::move(rays));
}

RaySet parse_rayset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open ray file '" + path + "'");
    return parse_rayset(in, path);
}

namespace {

std::string entry_to_string(const Ray& r, int i) {
    if (r.exact) {
        const GaussianRational& g = r.exact_entries[i];
        if (g.im.is_zero()) return g.re.str();
        std::string s = g.re.is_zero() ? "" : g.re.str();
        std::string im = g.im.str();
        if (!s.empty() && im[0] != '-') s += "+";
        return s + im + "i";
    }
    const cplx v = r.float_entries[i];
    std::ostringstream os;
    os.precision(17);
    os << v.real();
    if (v.imag() != 0.0) {
        if (v.imag() > 0) os << "+";
        os << v.imag() << "i";
    }
    return os.str();
}

} // namespace

std::string serialize_rayset(const RaySet& rs) {
    std::ostringstream os;
    os << "dim " << rs.dim << "\n";
    for (const Ray& r : rs.rays) {
        os << r.label << ": (";
        for (int i = 0; i < r.dim; ++i) {
            if (i) os << ", ";
            os << entry_to_string(r, i);
        }
        os << ")\n";
    }
    return os.str();
}

} // namespace ctxkit
