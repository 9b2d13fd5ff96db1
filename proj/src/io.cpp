#include "symcomb/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace symcomb::io {

json complex_to_json(const simplicial_complex& cx) {
    json j;
    j["n"] = cx.n();
    j["facets"] = json::array();
    for (const auto& f : cx.facet_vertices()) j["facets"].push_back(f);
    return j;
}

simplicial_complex complex_from_json(const json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<std::vector<int>> facets;
        for (const auto& f : j.at("facets")) facets.push_back(f.get<std::vector<int>>());
        return simplicial_complex::from_facets(n, facets);
    } catch (const json::exception& e) {
        throw parse_error(std::string("complex json: ") + e.what());
    }
}

json ideal_to_json(const monomial_ideal& a) {
    json j;
    j["n"] = a.ambient_n();
    j["gens"] = json::array();
    for (const auto& g : a.generators()) j["gens"].push_back(g);
    return j;
}

monomial_ideal ideal_from_json(const json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<monomial> gens;
        for (const auto& g : j.at("gens")) gens.push_back(g.get<monomial>());
        return monomial_ideal(n, std::move(gens));
    } catch (const json::exception& e) {
        throw parse_error(std::string("ideal json: ") + e.what());
    }
}

json weighted_to_json(const weighted_complex& wc) {
    json j;
    j["complex"] = complex_to_json(wc.complex);
    j["weights"] = json::array();
    for (size_t i = 0; i < wc.weights.size(); ++i)
        j["weights"].push_back(json::array({i, wc.weights[i]}));
    return j;
}

weighted_complex weighted_from_json(const json& j) {
    try {
        simplicial_complex cx = complex_from_json(j.at("complex"));
        std::vector<long> w(cx.facets().size(), 1);
        if (j.contains("weights")) {
            for (const auto& pair : j.at("weights")) {
                size_t idx = pair.at(0).get<size_t>();
                if (idx >= w.size()) throw parse_error("weight index out of range");
                w[idx] = pair.at(1).get<long>();
            }
        }
        return weighted_complex(std::move(cx), std::move(w));
    } catch (const json::exception& e) {
        throw parse_error(std::string("weighted complex json: ") + e.what());
    }
}

json betti_to_json(const betti_table& bt) {
    json j;
    j["n"] = bt.ambient_n;
    j["char"] = bt.field_char;
    j["entries"] = json::array();
    for (const auto& [ij, v] : bt.entries)
        if (v) j["entries"].push_back(json::array({ij.first, ij.second, v}));
    return j;
}

std::string monomial_to_text(const monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!first) os << "*";
        os << "x" << (i + 1);
        if (m[i] > 1) os << "^" << m[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

namespace {

struct cursor {
    const std::string& s;
    size_t pos = 0;
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw parse_error("expected an integer at position " + std::to_string(pos));
        return std::stol(s.substr(start, pos - start));
    }
};

// one term: [coefficient][*][x<i>[^e][*x<j>[^e]...]]
void parse_term(cursor& c, int n, monomial& m, mpq_class& coeff) {
    m.assign(static_cast<size_t>(n), 0);
    coeff = 1;
    bool saw_any = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        long p = c.integer();
        if (c.eat('/')) {
            long q = c.integer();
            if (q == 0) throw parse_error("zero denominator");
            coeff = mpq_class(p, q);
            coeff.canonicalize();
        } else {
            coeff = p;
        }
        saw_any = true;
        if (!c.eat('*')) return;
    }
    while (true) {
        if (c.peek() != 'x') {
            if (!saw_any) throw parse_error("expected a term");
            throw parse_error("expected a variable after '*'");
        }
        c.eat('x');
        long idx = c.integer();
        if (idx < 1 || idx > n) throw parse_error("variable x" + std::to_string(idx) + " out of range");
        long e = 1;
        if (c.eat('^')) e = c.integer();
        m[idx - 1] += static_cast<int>(e);
        saw_any = true;
        if (!c.eat('*')) break;
    }
}

}  // namespace

monomial monomial_from_text(const std::string& s, int ambient_n) {
    cursor c{s};
    monomial m;
    mpq_class coeff;
    parse_term(c, ambient_n, m, coeff);
    if (!c.eof()) throw parse_error("trailing input after monomial");
    if (coeff != 1) throw parse_error("a monomial may not carry a coefficient");
    return m;
}

std::string polynomial_to_text(const polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms) {
        mpq_class a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool constant = total_degree(m) == 0;
        if (a != 1 || constant) {
            os << a.get_str();
            if (!constant) os << "*";
        }
        if (!constant) os << monomial_to_text(m);
        first = false;
    }
    return os.str();
}

polynomial polynomial_from_text(const std::string& s, int ambient_n, const term_order& order) {
    cursor c{s};
    std::vector<std::pair<monomial, mpq_class>> terms;
    bool neg = false;
    if (c.eat('-'))
        neg = true;
    else
        c.eat('+');
    while (true) {
        monomial m;
        mpq_class coeff;
        parse_term(c, ambient_n, m, coeff);
        terms.emplace_back(std::move(m), neg ? -coeff : coeff);
        if (c.eof()) break;
        if (c.eat('+'))
            neg = false;
        else if (c.eat('-'))
            neg = true;
        else
            throw parse_error("expected '+' or '-' between terms");
    }
    return make_polynomial(ambient_n, std::move(terms), order);
}

std::vector<polynomial> ideal_file_from_text(const std::string& text, int ambient_n,
                                             const term_order& order) {
    std::vector<polynomial> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) {
                blank = false;
                break;
            }
        if (blank || line[0] == '#') continue;
        out.push_back(polynomial_from_text(line, ambient_n, order));
    }
    if (out.empty()) throw empty_input("no polynomials in ideal file");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json load_json_file(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw parse_error(std::string("json: ") + e.what());
    }
}

}  // namespace symcomb::io
