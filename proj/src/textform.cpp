#include "qtorus/textform.hpp"

#include <cctype>
#include <stdexcept>

namespace qtorus::text {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool rational_char(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'; }

}  // namespace

std::vector<std::pair<Scalar, std::string>> split_terms(std::string_view s) {
    s = trim(s);
    std::vector<std::pair<Scalar, std::string>> out;
    if (s.empty()) throw std::invalid_argument("empty expression");
    if (s == "0") return out;

    // Break at '+'/'-' that follow whitespace and are followed by whitespace.
    std::vector<std::pair<int, std::string_view>> pieces;
    int sign = 1;
    std::size_t start = 0;
    for (std::size_t p = 0; p < s.size(); ++p) {
        const char c = s[p];
        if ((c == '+' || c == '-') && p > 0 && p + 1 < s.size() &&
            std::isspace(static_cast<unsigned char>(s[p - 1])) &&
            std::isspace(static_cast<unsigned char>(s[p + 1]))) {
            pieces.emplace_back(sign, trim(s.substr(start, p - start)));
            sign = c == '+' ? 1 : -1;
            start = p + 1;
        }
    }
    pieces.emplace_back(sign, trim(s.substr(start)));

    for (auto [sg, piece] : pieces) {
        if (piece.empty()) throw std::invalid_argument("malformed expression '" + std::string(s) + "'");
        Scalar c(sg);
        std::string_view key = piece;
        if (auto star = piece.find('*'); star != std::string_view::npos) {
            std::string_view head = trim(piece.substr(0, star));
            bool numeric = !head.empty();
            for (char ch : head) numeric = numeric && rational_char(ch);
            if (numeric) {
                c *= Scalar::parse(head);
                key = trim(piece.substr(star + 1));
            }
        }
        if (!key.empty() && key.front() == '-') {
            c = -c;
            key = trim(key.substr(1));
        }
        if (key.empty()) throw std::invalid_argument("term without key in '" + std::string(s) + "'");
        out.emplace_back(c, std::string(key));
    }
    return out;
}

std::string term(const Scalar& c, const std::string& key) {
    if (c.is_one()) return key;
    if (c == Scalar(-1)) return "-" + key;
    return c.str() + "*" + key;
}

std::string join(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (std::size_t t = 1; t < terms.size(); ++t) out += " + " + terms[t];
    return out;
}

std::vector<long> int_tuple(std::string_view s, char open, char close) {
    s = trim(s);
    if (s.size() < 2 || s.front() != open || s.back() != close)
        throw std::invalid_argument("expected a tuple in '" + std::string(s) + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<long> out;
    if (trim(s).empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        std::string item(trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace qtorus::text
