#include "ctxkit/states.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "ctxkit/avn.hpp"
#include "ctxkit/magic.hpp"

namespace ctxkit {

DensityMatrix builtin_state(const std::string& tag, int native_dim) {
    if (tag == "mixed") return DensityMatrix::maximally_mixed(native_dim);
    if (tag == "xi") return bell_psi_minus_crossed();
    if (tag == "phi+") return bell_phi_plus();
    if (tag == "maxent3x3") {
        const double s = 1.0 / std::sqrt(3.0);
        std::vector<cplx> amp(9, cplx(0.0));
        amp[0] = s;    // |00>
        amp[4] = -s;   // |11>
        amp[8] = s;    // |22>
        return make_pure_state(amp);
    }
    if (tag == "magicopt") return quantum_max_magic().second;
    throw DomainError("unknown state tag '" + tag + "'");
}

namespace {

std::string trim_ws(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim_ws(line);
        if (!line.empty()) return true;
    }
    return false;
}

double parse_real_part(const std::string& tok, int line_no) {
    try {
        size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) throw ParseError("bad numeric literal '" + tok + "'", line_no);
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad numeric literal '" + tok + "'", line_no);
    }
}

cplx parse_complex(std::string tok, int line_no) {
    tok = trim_ws(tok);
    if (tok.empty()) throw ParseError("empty state entry", line_no);
    bool imaginary_tail = tok.back() == 'i' || tok.back() == 'I';
    if (!imaginary_tail) return {parse_real_part(tok, line_no), 0.0};
    std::string body = tok.substr(0, tok.size() - 1);
    // Split at the last sign that is not a leading sign or an exponent sign.
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
        char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        // Purely imaginary: i, -i, 0.7i, ...
        if (body.empty() || body == "+") return {0.0, 1.0};
        if (body == "-") return {0.0, -1.0};
        return {0.0, parse_real_part(body, line_no)};
    }
    double re = parse_real_part(body.substr(0, split), line_no);
    std::string imag = body.substr(split);
    if (imag == "+") return {re, 1.0};
    if (imag == "-") return {re, -1.0};
    return {re, parse_real_part(imag, line_no)};
}

} // namespace

DensityMatrix parse_state(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_content_line(in, line, line_no)) throw ParseError("empty state file");
    std::istringstream header(line);
    std::string kw;
    int dim = 0;
    header >> kw >> dim;
    if (kw != "dim" || dim < 1 || dim > 64)
        throw ParseError("expected 'dim <d>' header", line_no);

    if (!next_content_line(in, line, line_no)) throw ParseError("missing state body", line_no);
    if (line.rfind("pure", 0) == 0) {
        size_t open = line.find('('), close = line.rfind(')');
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw ParseError("expected 'pure (c1, ..., cd)'", line_no);
        std::istringstream items(line.substr(open + 1, close - open - 1));
        std::vector<cplx> amp;
        std::string item;
        while (std::getline(items, item, ',')) amp.push_back(parse_complex(item, line_no));
        if (static_cast<int>(amp.size()) != dim)
            throw ParseError("pure state lists " + std::to_string(amp.size()) +
                                 " amplitudes for dim " + std::to_string(dim),
                             line_no);
        return make_pure_state(amp);
    }
    if (line == "mixed") {
        CMatrix m(dim, dim);
        for (int i = 0; i < dim; ++i) {
            if (!next_content_line(in, line, line_no))
                throw ParseError("matrix row " + std::to_string(i) + " missing", line_no);
            std::istringstream row(line);
            std::string tok;
            int j = 0;
            while (row >> tok) {
                if (j >= dim) throw ParseError("too many entries in matrix row", line_no);
                m(i, j) = parse_complex(tok, line_no);
                ++j;
            }
            if (j != dim)
                throw ParseError("matrix row has " + std::to_string(j) + " of " +
                                     std::to_string(dim) + " entries",
                                 line_no);
        }
        try {
            return DensityMatrix::from_matrix(m);
        } catch (const Error& e) {
            throw ParseError(std::string(e.what()));
        }
    }
    throw ParseError("expected 'pure (...)' or 'mixed'", line_no);
}

DensityMatrix parse_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open state file '" + path + "'");
    return parse_state(in);
}

} // namespace ctxkit
