#include "rdga/geometry.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "rdga/errors.hpp"

namespace rdga {

namespace {

int columns(const std::string& s, std::size_t bytes) {
    int c = 0;
    for (std::size_t i = 0; i < bytes && i < s.size(); ++i)
        if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) ++c;
    return c;
}

// trims a [b, e) range of line in place, returning the byte offset of the first kept character
std::size_t trim_range(const std::string& line, std::size_t& b, std::size_t& e) {
    while (b < e && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
    return b;
}

SourceText slice(const std::string& line, int lineno, std::size_t b, std::size_t e) {
    trim_range(line, b, e);
    return {line.substr(b, e - b), lineno, columns(line, b) + 1};
}

// splits at commas outside parentheses
std::vector<SourceText> split_list(const std::string& line, int lineno, std::size_t b, std::size_t e) {
    std::vector<SourceText> out;
    int depth = 0;
    std::size_t start = b;
    for (std::size_t i = b; i < e; ++i) {
        if (line[i] == '(') ++depth;
        if (line[i] == ')') --depth;
        if (line[i] == ',' && depth == 0) {
            out.push_back(slice(line, lineno, start, i));
            start = i + 1;
        }
    }
    out.push_back(slice(line, lineno, start, e));
    for (const SourceText& t : out)
        if (t.text.empty()) throw ParseError("empty list entry", t.line, t.column);
    return out;
}

Rational parse_constant(const SourceText& t) {
    // a one-variable chart whose coordinate cannot be spelled in an expression
    static const ChartPtr none = Chart::make({"\x01"}, Ring::rational(1));
    Scalar v = parse_expression(t.text, *none, t.line, t.column);
    if (!v.rational().is_constant()) throw ParseError("expected a constant", t.line, t.column);
    return v.rational().constant_value();
}

struct Line {
    std::string text;  // comment stripped
    int number;
};

void set_once(std::set<std::string>& seen, const std::string& key, const Line& l) {
    if (!seen.insert(key).second) throw ParseError("duplicate key '" + key + "'", l.number, 1);
}

std::string row_text(const std::vector<SourceText>& row) {
    std::string s;
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? ", " : "") + row[j].text;
    return s;
}

}  // namespace

GeometryDef parse_geometry(const std::string& text) {
    std::vector<Line> lines;
    {
        std::istringstream in(text);
        std::string raw;
        int n = 0;
        while (std::getline(in, raw)) {
            ++n;
            std::size_t hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            lines.push_back({raw, n});
        }
    }
    GeometryDef def;
    std::set<std::string> seen;
    bool in_conformal = false;
    int conformal_line = 0;
    std::set<std::string> conf_seen;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const Line& l = lines[k];
        std::size_t b = 0, e = l.text.size();
        trim_range(l.text, b, e);
        if (b == e) continue;
        std::string body = l.text.substr(b, e - b);
        if (in_conformal && body == "}") {
            in_conformal = false;
            continue;
        }
        if (!in_conformal && body.rfind("conformal", 0) == 0 && body.back() == '{' &&
            body.substr(9, body.size() - 10).find_first_not_of(" \t") == std::string::npos) {
            set_once(seen, "conformal", l);
            in_conformal = true;
            conformal_line = l.number;
            continue;
        }
        std::size_t eq = l.text.find('=', b);
        if (eq == std::string::npos || eq >= e) throw ParseError("expected 'key = value'", l.number, columns(l.text, b) + 1);
        std::size_t kb = b, ke = eq;
        trim_range(l.text, kb, ke);
        std::string key = l.text.substr(kb, ke - kb);
        std::size_t vb = eq + 1, ve = e;
        trim_range(l.text, vb, ve);
        SourceText value = slice(l.text, l.number, vb, ve);
        if (value.text.empty()) throw ParseError("missing value for '" + key + "'", l.number, columns(l.text, ve) + 1);

        if (in_conformal) {
            if (!conf_seen.insert(key).second) throw ParseError("duplicate key '" + key + "'", l.number, 1);
            if (key == "tau")
                def.tau = split_list(l.text, l.number, vb, ve);
            else if (key == "alpha")
                def.alpha = value;
            else if (key == "beta")
                def.beta = value;
            else
                throw ParseError("unknown conformal key '" + key + "'", l.number, columns(l.text, kb) + 1);
            continue;
        }
        set_once(seen, key, l);
        if (key == "name") {
            def.name = value.text;
        } else if (key == "coordinates") {
            for (const SourceText& c : split_list(l.text, l.number, vb, ve)) {
                for (unsigned char ch : c.text)
                    if (std::isspace(ch) || std::string("+-*/^()").find(ch) != std::string::npos)
                        throw ParseError("bad coordinate name '" + c.text + "'", c.line, c.column);
                def.coords.push_back(c.text);
            }
        } else if (key == "backend") {
            if (value.text == "jet")
                def.jet = true;
            else if (value.text != "rational")
                throw ParseError("backend must be 'rational' or 'jet'", value.line, value.column);
        } else if (key == "base_point") {
            for (const SourceText& c : split_list(l.text, l.number, vb, ve)) def.base_point.push_back(parse_constant(c));
        } else if (key == "order") {
            Rational o = parse_constant(value);
            if (o.get_den() != 1 || o < 1 || o > 12) throw ParseError("order must be an integer 1..12", value.line, value.column);
            def.order = static_cast<int>(o.get_num().get_si());
        } else if (key == "einstein") {
            def.einstein = parse_constant(value);
        } else if (key == "metric") {
            if (value.text.front() != '[') throw ParseError("metric must be a [ ... ] block", value.line, value.column);
            // rows separated by ';' or newlines, closed by ']'
            std::size_t start = vb + 1;
            std::size_t kk = k;
            bool closed = false;
            while (!closed) {
                const Line& cur = lines[kk];
                std::size_t close = cur.text.find(']', start);
                std::size_t end = close == std::string::npos ? cur.text.size() : close;
                std::size_t s0 = start;
                for (std::size_t i = start; i <= end; ++i) {
                    if (i == end || cur.text[i] == ';') {
                        std::size_t rb = s0, re = i;
                        trim_range(cur.text, rb, re);
                        if (rb < re) def.metric.push_back(split_list(cur.text, cur.number, rb, re));
                        s0 = i + 1;
                    }
                }
                if (close != std::string::npos) {
                    closed = true;
                    std::size_t tb = close + 1, te = cur.text.size();
                    trim_range(cur.text, tb, te);
                    if (tb < te) throw ParseError("unexpected text after ']'", cur.number, columns(cur.text, tb) + 1);
                } else {
                    ++kk;
                    start = 0;
                    if (kk >= lines.size()) throw ParseError("unterminated metric block", l.number, value.column);
                }
            }
            k = kk;
        } else {
            throw ParseError("unknown key '" + key + "'", l.number, columns(l.text, kb) + 1);
        }
    }
    const int last = lines.empty() ? 1 : lines.back().number;
    if (in_conformal) throw ParseError("unterminated conformal block", conformal_line, 1);
    if (def.name.empty()) throw ParseError("missing 'name'", last, 1);
    if (def.coords.empty()) throw ParseError("missing 'coordinates'", last, 1);
    const int n = static_cast<int>(def.coords.size());
    if (n > 8) throw ParseError("at most 8 coordinates", last, 1);
    if (def.metric.empty()) throw ParseError("missing 'metric'", last, 1);
    if (static_cast<int>(def.metric.size()) != n) throw InvalidMetric("metric must have one row per coordinate");
    for (const auto& row : def.metric)
        if (static_cast<int>(row.size()) != n) throw InvalidMetric("metric row '" + row_text(row) + "' has the wrong length");
    if (def.jet && static_cast<int>(def.base_point.size()) != n)
        throw ParseError("jet backend needs a base_point with one entry per coordinate", last, 1);
    if (!def.jet && !def.base_point.empty()) throw ParseError("base_point only applies to the jet backend", last, 1);
    if (seen.count("conformal")) {
        if (static_cast<int>(def.tau.size()) != n || def.alpha.text.empty() || def.beta.text.empty())
            throw ParseError("conformal block needs tau (one entry per coordinate), alpha and beta", conformal_line, 1);
    }
    build_geometry(def);  // validates every expression and the metric
    return def;
}

std::string geometry_text(const GeometryDef& def) {
    std::ostringstream os;
    os << "name = " << def.name << "\n";
    os << "coordinates = ";
    for (std::size_t i = 0; i < def.coords.size(); ++i) os << (i ? ", " : "") << def.coords[i];
    os << "\nbackend = " << (def.jet ? "jet" : "rational") << "\n";
    if (def.jet) {
        os << "base_point = ";
        for (std::size_t i = 0; i < def.base_point.size(); ++i) os << (i ? ", " : "") << def.base_point[i].get_str();
        os << "\norder = " << def.order << "\n";
    }
    if (def.einstein) os << "einstein = " << def.einstein->get_str() << "\n";
    os << "metric = [\n";
    for (const auto& row : def.metric) os << "  " << row_text(row) << "\n";
    os << "]\n";
    if (def.has_conformal()) {
        os << "conformal {\n  tau = " << row_text(def.tau) << "\n  alpha = " << def.alpha.text
           << "\n  beta = " << def.beta.text << "\n}\n";
    }
    return os.str();
}

Geometry build_geometry(const GeometryDef& def, int order) {
    Geometry g;
    g.def = def;
    if (order > 0) g.def.order = order;
    const int n = static_cast<int>(def.coords.size());
    Ring ring = def.jet ? Ring::jet(n, g.def.order, def.base_point) : Ring::rational(n);
    g.chart = Chart::make(def.coords, ring);
    ScalarMatrix m(n, std::vector<Scalar>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const SourceText& t = def.metric[i][j];
            m[i][j] = parse_expression(t.text, *g.chart, t.line, t.column);
        }
    g.metric = std::make_shared<const Metric>(g.chart, m);
    if (def.has_conformal()) {
        ConformalData c{Form(g.chart), parse_expression(def.alpha.text, *g.chart, def.alpha.line, def.alpha.column),
                        parse_constant(def.beta)};
        for (int i = 0; i < n; ++i) {
            const SourceText& t = def.tau[i];
            c.tau += parse_expression(t.text, *g.chart, t.line, t.column) * Form::dx(g.chart, i);
        }
        g.conformal = c;
    }
    return g;
}

namespace {

std::string flat_text(int n, const std::string& name, const std::string& variant) {
    static const std::vector<std::string> xs{"x", "y", "z"};
    std::ostringstream os;
    os << "name = " << name << "\ncoordinates = ";
    for (int i = 0; i < n; ++i) os << (i ? ", " : "") << xs[i];
    os << "\nbackend = rational\neinstein = 0\nmetric = [\n";
    for (int i = 0; i < n; ++i) {
        os << " ";
        for (int j = 0; j < n; ++j) os << (j ? ", " : " ") << (i == j ? 1 : 0);
        os << "\n";
    }
    os << "]\n";
    if (variant.empty()) return os.str();
    std::vector<std::string> tau;
    std::string alpha;
    if (variant == "euler") {
        // Euler form x_i dx^i
        for (int i = 0; i < n; ++i) tau.push_back(xs[i]);
        alpha = "2";
    } else if (variant == "sct") {
        // special conformal along x: 2x x_i dx^i − r² dx
        std::string r2;
        for (int i = 0; i < n; ++i) r2 += (i ? " + " : "") + xs[i] + "^2";
        tau.push_back("2*x*x - (" + r2 + ")");
        for (int i = 1; i < n; ++i) tau.push_back("2*x*" + xs[i]);
        alpha = "4*x";
    } else {
        tau.push_back("1");
        for (int i = 1; i < n; ++i) tau.push_back("0");
        alpha = "0";
    }
    os << "conformal {\n  tau = ";
    for (int i = 0; i < n; ++i) os << (i ? ", " : "") << tau[i];
    os << "\n  alpha = " << alpha << "\n  beta = " << ratio(n, 2).get_str() << "\n}\n";
    return os.str();
}

std::string sphere_text(const std::string& name, const Rational& r) {
    Rational r2 = r * r;
    Rational k = 1 / r2;
    std::string s = r2 == 1 ? "" : r2.get_str() + "*";
    std::ostringstream os;
    os << "name = " << name << "\ncoordinates = θ, φ\nbackend = jet\nbase_point = 1, 1\norder = 4\n"
       << "einstein = " << k.get_str() << "\nmetric = [\n  " << (r2 == 1 ? "1" : r2.get_str()) << ", 0\n  0, " << s
       << "sin(θ)^2\n]\n";
    return os.str();
}

}  // namespace

std::vector<std::string> builtin_geometry_names() {
    return {"flat2", "flat3", "sphere2", "sphere2r", "diagpoly", "flat2+euler", "flat3+euler", "flat2+sct",
            "flat3+sct", "flat2+killing", "flat3+killing"};
}

std::optional<std::string> builtin_geometry_text(const std::string& name) {
    std::string base = name, variant;
    if (std::size_t plus = name.find('+'); plus != std::string::npos) {
        base = name.substr(0, plus);
        variant = name.substr(plus + 1);
        if (variant != "euler" && variant != "sct" && variant != "killing") return std::nullopt;
        if (base != "flat2" && base != "flat3") return std::nullopt;
    }
    if (base == "flat2") return flat_text(2, name, variant);
    if (base == "flat3") return flat_text(3, name, variant);
    if (base == "sphere2") return sphere_text(name, 1);
    if (base.rfind("sphere2r", 0) == 0) {
        Rational r(2);
        if (base.size() > 8) {
            if (base[8] != ':') return std::nullopt;
            try {
                r = parse_rational(base.substr(9));
            } catch (const std::exception&) {
                return std::nullopt;
            }
            if (r <= 0) return std::nullopt;
        }
        return sphere_text(name, r);
    }
    if (base == "diagpoly")
        return std::string("name = diagpoly\ncoordinates = x, y\nbackend = rational\nmetric = [\n  1 + x^2, 0\n"
                           "  0, 1 + y^2\n]\n");
    return std::nullopt;
}

Geometry load_geometry(const std::string& name_or_path, int order) {
    if (auto text = builtin_geometry_text(name_or_path)) return build_geometry(parse_geometry(*text), order);
    std::filesystem::path p(name_or_path);
    if (!std::filesystem::is_regular_file(p))
        throw UsageError("unknown geometry '" + name_or_path + "' (not a built-in name or a readable file)");
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return build_geometry(parse_geometry(ss.str()), order);
}

}  // namespace rdga
