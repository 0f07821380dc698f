#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace matchtop {

/// Structured vertex label: an integer, a name, or a tuple of labels.
///
/// Grid vertices are tuples such as ("g", 2, 3); product vertices are pairs
/// (u, v); line-graph vertices are the sorted endpoint pair of an edge.
/// Ordering: integers < strings < tuples, tuples lexicographic.
class Label {
public:
    using Tuple = std::vector<Label>;

    Label() : v_(std::int64_t{0}) {}
    Label(std::int64_t i) : v_(i) {}
    Label(int i) : v_(std::int64_t{i}) {}
    Label(std::string s) : v_(std::move(s)) {}
    Label(const char* s) : v_(std::string(s)) {}
    Label(Tuple t) : v_(std::move(t)) {}

    static Label tuple(std::initializer_list<Label> t) { return Label(Tuple(t)); }
    static Label pair(Label a, Label b) { return Label(Tuple{std::move(a), std::move(b)}); }

    bool is_int() const { return v_.index() == 0; }
    bool is_string() const { return v_.index() == 1; }
    bool is_tuple() const { return v_.index() == 2; }

    std::int64_t as_int() const { return std::get<0>(v_); }
    const std::string& as_string() const { return std::get<1>(v_); }
    const Tuple& as_tuple() const { return std::get<2>(v_); }

    friend bool operator==(const Label& a, const Label& b) { return compare(a, b) == 0; }
    friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
        int c = compare(a, b);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    static int compare(const Label& a, const Label& b) {
        if (a.v_.index() != b.v_.index()) return a.v_.index() < b.v_.index() ? -1 : 1;
        switch (a.v_.index()) {
        case 0: {
            auto x = a.as_int(), y = b.as_int();
            return x < y ? -1 : (x > y ? 1 : 0);
        }
        case 1: {
            int c = a.as_string().compare(b.as_string());
            return c < 0 ? -1 : (c > 0 ? 1 : 0);
        }
        default: {
            const auto& x = a.as_tuple();
            const auto& y = b.as_tuple();
            std::size_t n = std::min(x.size(), y.size());
            for (std::size_t i = 0; i < n; ++i) {
                int c = compare(x[i], y[i]);
                if (c != 0) return c;
            }
            return x.size() < y.size() ? -1 : (x.size() > y.size() ? 1 : 0);
        }
        }
    }

    /// Human-readable form: 7, g(1,2), (3,(1,2)).
    std::string str() const {
        switch (v_.index()) {
        case 0: return std::to_string(as_int());
        case 1: return as_string();
        default: {
            const auto& t = as_tuple();
            std::string out;
            std::size_t start = 0;
            if (!t.empty() && t[0].is_string()) {
                out = t[0].as_string();
                start = 1;
            }
            out += '(';
            for (std::size_t i = start; i < t.size(); ++i) {
                if (i > start) out += ',';
                out += t[i].str();
            }
            out += ')';
            return out;
        }
        }
    }

    nlohmann::json to_json() const {
        switch (v_.index()) {
        case 0: return as_int();
        case 1: return as_string();
        default: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& x : as_tuple()) arr.push_back(x.to_json());
            return arr;
        }
        }
    }

    static Label from_json(const nlohmann::json& j) {
        if (j.is_number_integer()) return Label(j.get<std::int64_t>());
        if (j.is_string()) return Label(j.get<std::string>());
        if (j.is_array()) {
            Tuple t;
            t.reserve(j.size());
            for (const auto& x : j) t.push_back(from_json(x));
            return Label(std::move(t));
        }
        throw std::invalid_argument("label must be an integer, string or array: " + j.dump());
    }

    /// Inverse of str() for labels built from integers and names: "7", "g(1,2)", "(3,(1,2))".
    /// Text that is not of that shape is taken as a plain string label.
    static Label parse(const std::string& s) {
        std::size_t pos = 0;
        try {
            Label l = parse_item(s, pos);
            if (pos == s.size()) return l;
        } catch (const std::invalid_argument&) {
        }
        return Label(s);
    }

private:
    static Label parse_item(const std::string& s, std::size_t& pos) {
        auto bad = [] { throw std::invalid_argument("not a structured label"); };
        std::string head;
        while (pos < s.size() && s[pos] != '(' && s[pos] != ')' && s[pos] != ',') head += s[pos++];
        if (pos == s.size() || s[pos] != '(') {
            if (head.empty()) bad();
            const bool digits = head.find_first_not_of("-0123456789") == std::string::npos &&
                                head.find('-', 1) == std::string::npos && head != "-";
            if (digits) return Label(static_cast<std::int64_t>(std::stoll(head)));
            return Label(head);
        }
        Tuple t;
        if (!head.empty()) t.push_back(Label(head));
        ++pos;
        while (true) {
            t.push_back(parse_item(s, pos));
            if (pos == s.size()) bad();
            if (s[pos] == ')') break;
            if (s[pos] != ',') bad();
            ++pos;
        }
        ++pos;
        return Label(std::move(t));
    }

    std::variant<std::int64_t, std::string, Tuple> v_;
};

inline std::ostream& operator<<(std::ostream& os, const Label& l) { return os << l.str(); }

/// ("name", i) and ("name", i, j) helpers for family vertex names.
inline Label named(const std::string& name, std::int64_t i) { return Label::tuple({Label(name), Label(i)}); }
inline Label named(const std::string& name, std::int64_t i, std::int64_t j) {
    return Label::tuple({Label(name), Label(i), Label(j)});
}

} // namespace matchtop
