#include "crucial/text.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace crucial {

namespace {

std::vector<std::string> split_tokens(std::string_view text, std::string_view separators) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (separators.find(ch) != std::string_view::npos) {
            if (!cur.empty()) tokens.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

int parse_int(const std::string& token, const char* what) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": bad integer '" + token + "'");
    }
    if (used != token.size())
        throw std::invalid_argument(std::string(what) + ": bad integer '" + token + "'");
    return value;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
    const auto tokens = split_tokens(text, " \t\r\n,");
    std::vector<int> word;
    if (tokens.size() == 1 && tokens[0].size() > 1) {
        // compact digit form, one value per digit
        for (char ch : tokens[0]) {
            if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
                throw std::invalid_argument("permutation: bad compact form '" + tokens[0] + "'");
            word.push_back(ch - '0');
        }
    } else {
        for (const auto& tok : tokens) word.push_back(parse_int(tok, "permutation"));
    }
    return Permutation(std::move(word));
}

std::string format_permutation(const Permutation& p) {
    std::string out;
    for (size_t i = 0; i < p.word().size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(p.word()[i]);
    }
    return out;
}

YoungShape parse_shape(std::string_view text) {
    std::vector<int> parts;
    for (const auto& tok : split_tokens(text, " \t\r\n,")) parts.push_back(parse_int(tok, "shape"));
    return YoungShape(std::move(parts));
}

std::string format_shape(const YoungShape& shape) {
    std::string out;
    for (size_t i = 0; i < shape.parts().size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(shape.parts()[i]);
    }
    return out;
}

std::string format_tableau(const StandardTableau& t) {
    std::string out;
    for (const auto& row : t.rows()) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out.push_back(' ');
            out += std::to_string(row[c]);
        }
        out.push_back('\n');
    }
    return out;
}

StandardTableau parse_tableau(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto tokens = split_tokens(line, " \t\r");
        if (tokens.empty()) continue;
        std::vector<int> row;
        for (const auto& tok : tokens) row.push_back(parse_int(tok, "tableau"));
        rows.push_back(std::move(row));
    }
    return StandardTableau(std::move(rows));
}

std::string format_tableau_pair(const TableauPair& pair) {
    return format_tableau(pair.P) + "\n" + format_tableau(pair.Q);
}

TableauPair parse_tableau_pair(std::string_view text) {
    const size_t split = text.find("\n\n");
    if (split == std::string_view::npos)
        throw std::invalid_argument("tableau pair: expected a blank line between the tableaux");
    const StandardTableau p = parse_tableau(text.substr(0, split));
    const StandardTableau q = parse_tableau(text.substr(split + 2));
    if (p.shape() != q.shape()) throw std::invalid_argument("tableau pair: shapes differ");
    return TableauPair{p, q};
}

nlohmann::json to_json(const CrucialClass& cc) {
    return nlohmann::json{{"n", cc.n},
                          {"k", cc.k},
                          {"l", cc.l},
                          {"right", cc.right},
                          {"left", cc.left},
                          {"top", cc.top},
                          {"bottom", cc.bottom},
                          {"bicrucial", cc.bicrucial()},
                          {"top_right", cc.top_right()},
                          {"tricrucial", cc.tricrucial()},
                          {"quadrocrucial", cc.quadrocrucial()}};
}

nlohmann::json to_json(const CountReport& rep) {
    nlohmann::json shapes = nlohmann::json::array();
    for (const auto& sq : rep.per_shape)
        shapes.push_back({{"shape", format_shape(sq.shape)}, {"m", sq.m.str()}});
    return nlohmann::json{{"n", rep.n},
                          {"k", rep.k},
                          {"l", rep.l},
                          {"type", to_string(rep.type)},
                          {"method", to_string(rep.method)},
                          {"count", rep.count.str()},
                          {"per_shape", shapes}};
}

std::string count_report_csv_header() { return "n,k,l,type,method,count"; }

std::string count_report_csv_row(const CountReport& rep) {
    return std::to_string(rep.n) + "," + std::to_string(rep.k) + "," + std::to_string(rep.l) + "," +
           to_string(rep.type) + "," + to_string(rep.method) + "," + rep.count.str();
}

}  // namespace crucial
