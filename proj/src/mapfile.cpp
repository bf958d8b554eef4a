#include "skewdyn/mapfile.hpp"

#include "skewdyn/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace skew {

namespace {

using json = nlohmann::json;

class TomlReader {
public:
    explicit TomlReader(const std::string& text) : s_(text) {}

    json run()
    {
        json root = json::object();
        json* table = &root;
        for (;;) {
            skip_blank_lines();
            if (eof()) break;
            if (peek() == '[') {
                ++i_;
                std::string name = key();
                expect(']');
                if (root.contains(name)) fail("duplicate table [" + name + "]");
                root[name] = json::object();
                table = &root[name];
            } else {
                std::string k = key();
                expect('=');
                if (table->contains(k)) fail("duplicate key '" + k + "'");
                (*table)[k] = value();
            }
            end_of_line();
        }
        return root;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
    int line_ = 1;

    bool eof() const { return i_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[i_]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(errc::invalid_input, "toml line " + std::to_string(line_) + ": " + what);
    }

    void skip_space()
    {
        while (!eof() && (peek() == ' ' || peek() == '\t')) ++i_;
    }

    void skip_comment()
    {
        if (peek() == '#')
            while (!eof() && peek() != '\n') ++i_;
    }

    void skip_blank_lines()
    {
        for (;;) {
            skip_space();
            skip_comment();
            if (peek() == '\r') ++i_;
            if (peek() != '\n') return;
            ++i_;
            ++line_;
        }
    }

    void end_of_line()
    {
        skip_space();
        skip_comment();
        if (peek() == '\r') ++i_;
        if (eof()) return;
        if (peek() != '\n') fail(std::string("unexpected '") + peek() + "'");
        ++i_;
        ++line_;
    }

    void expect(char c)
    {
        skip_space();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }

    std::string key()
    {
        skip_space();
        if (peek() == '"') return basic_string();
        std::size_t start = i_;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) ++i_;
        if (i_ == start) fail("expected a key");
        return s_.substr(start, i_ - start);
    }

    std::string basic_string()
    {
        ++i_;
        std::string out;
        while (!eof() && peek() != '"') {
            char c = s_[i_++];
            if (c == '\n') fail("newline in string");
            if (c == '\\') {
                char e = s_[i_++];
                switch (e) {
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                default: fail(std::string("unsupported escape \\") + e);
                }
            } else {
                out += c;
            }
        }
        if (eof()) fail("unterminated string");
        ++i_;
        return out;
    }

    // whitespace, newlines and comments inside arrays
    void skip_array_gap()
    {
        for (;;) {
            skip_space();
            skip_comment();
            if (peek() == '\r') ++i_;
            if (peek() != '\n') return;
            ++i_;
            ++line_;
        }
    }

    json value()
    {
        skip_space();
        char c = peek();
        if (c == '"') return basic_string();
        if (c == '[') {
            ++i_;
            json arr = json::array();
            for (;;) {
                skip_array_gap();
                if (peek() == ']') {
                    ++i_;
                    return arr;
                }
                arr.push_back(value());
                skip_array_gap();
                if (peek() == ',') {
                    ++i_;
                } else if (peek() != ']') {
                    fail("expected ',' or ']' in array");
                }
            }
        }
        if (s_.compare(i_, 4, "true") == 0) {
            i_ += 4;
            return true;
        }
        if (s_.compare(i_, 5, "false") == 0) {
            i_ += 5;
            return false;
        }
        return number();
    }

    json number()
    {
        std::size_t start = i_;
        std::string digits;
        bool is_float = false;
        while (!eof()) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') {
                digits += c;
            } else if (c == '.' || c == 'e' || c == 'E') {
                digits += c;
                is_float = true;
            } else if (c != '_') {
                break;
            }
            ++i_;
        }
        if (i_ == start) fail("expected a value");
        try {
            std::size_t used = 0;
            if (is_float) {
                double v = std::stod(digits, &used);
                if (used == digits.size()) return v;
            } else {
                long long v = std::stoll(digits, &used);
                if (used == digits.size()) return v;
            }
        } catch (const std::exception&) {
        }
        fail("malformed number '" + digits + "'");
    }
};

double real_at(const json& row, std::size_t k, const std::string& where)
{
    if (!row.at(k).is_number()) throw Error(errc::invalid_input, where + ": expected a number at position " + std::to_string(k));
    return row.at(k).get<double>();
}

int int_at(const json& row, std::size_t k, const std::string& where)
{
    if (!row.at(k).is_number_integer())
        throw Error(errc::invalid_input, where + ": expected an integer exponent at position " + std::to_string(k));
    return row.at(k).get<int>();
}

}  // namespace

json parse_toml(const std::string& text) { return TomlReader(text).run(); }

MapSpec map_from_json(const json& doc)
{
    if (!doc.is_object()) throw Error(errc::invalid_input, "map file must be an object");
    for (auto& key : {"p", "q"})
        if (!doc.contains(key) || !doc.at(key).is_array())
            throw Error(errc::invalid_input, std::string("map file needs an array '") + key + "'");

    std::map<int, cplx> pc;
    const json& p = doc.at("p");
    for (std::size_t n = 0; n < p.size(); ++n) {
        std::string where = "p[" + std::to_string(n) + "]";
        if (!p[n].is_array() || p[n].size() != 3) throw Error(errc::invalid_input, where + ": expected [k, re, im]");
        int k = int_at(p[n], 0, where);
        if (pc.count(k)) throw Error(errc::invalid_input, where + ": repeated exponent z^" + std::to_string(k));
        pc[k] = {real_at(p[n], 1, where), real_at(p[n], 2, where)};
    }

    std::map<Exponent, cplx> qc;
    const json& q = doc.at("q");
    for (std::size_t n = 0; n < q.size(); ++n) {
        std::string where = "q[" + std::to_string(n) + "]";
        if (!q[n].is_array() || q[n].size() != 4)
            throw Error(errc::invalid_input, where + ": expected [i, j, re, im]");
        Exponent e{int_at(q[n], 0, where), int_at(q[n], 1, where)};
        if (qc.count(e))
            throw Error(errc::invalid_input, where + ": repeated monomial z^" + std::to_string(e.first) + " w^" +
                                                 std::to_string(e.second));
        qc[e] = {real_at(q[n], 2, where), real_at(q[n], 3, where)};
    }

    MapSpec out{SkewProduct{UniPoly(pc), BiPoly(qc)}, {}, doc};
    if (doc.contains("defaults")) {
        const json& d = doc.at("defaults");
        try {
            if (d.contains("r_grid")) out.defaults.r_grid = d.at("r_grid").get<std::vector<double>>();
            if (d.contains("samples")) out.defaults.samples = d.at("samples").get<int>();
            if (d.contains("seed")) out.defaults.seed = d.at("seed").get<std::uint64_t>();
            if (d.contains("tol")) out.defaults.tol = d.at("tol").get<double>();
            if (d.contains("n_max")) out.defaults.n_max = d.at("n_max").get<int>();
        } catch (const json::exception& e) {
            throw Error(errc::invalid_input, std::string("defaults: ") + e.what());
        }
        for (double r : out.defaults.r_grid)
            if (!(r > 0.0 && r < 1.0)) throw Error(errc::invalid_input, "defaults.r_grid entries must lie in (0, 1)");
        if (out.defaults.samples < 1 || out.defaults.n_max < 1 || !(out.defaults.tol > 0.0))
            throw Error(errc::invalid_input, "defaults: samples, n_max and tol must be positive");
    }
    return out;
}

MapSpec parse_map(const std::string& text, bool toml)
{
    if (toml) return map_from_json(parse_toml(text));
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t upto = std::min(e.byte, text.size());
        long line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
        throw Error(errc::invalid_input, "json line " + std::to_string(line) + ": " + e.what());
    }
    return map_from_json(doc);
}

MapSpec load_map(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(errc::invalid_input, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    bool toml = path.size() >= 5 && path.compare(path.size() - 5, 5, ".toml") == 0;
    return parse_map(buf.str(), toml);
}

}  // namespace skew
