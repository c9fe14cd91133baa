#pragma once

#include <cctype>
#include <charconv>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "graph.hpp"
#include "instruction.hpp"
#include "violation.hpp"

namespace hamming_radio {

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

inline int parse_int(std::string_view s, std::string_view what)
{
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw Error(Errc::ParseError, "bad " + std::string(what) + " '" + std::string(s) + "'");
    return value;
}

inline std::vector<std::string_view> split_whitespace(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        const auto start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

inline std::vector<std::string_view> lines_of(std::string_view text)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        out.push_back(line);
        start = end + 1;
    }
    return out;
}

} // namespace detail

/// Parses "3^4x4^7", "3^4 x 4^7" or "5" (t = 1).
inline GraphSpec parse_spec(std::string_view text)
{
    std::vector<Factor> factors;
    std::string cleaned;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            cleaned += c;
    if (cleaned.empty())
        throw Error(Errc::ParseError, "empty graph spec");
    std::size_t start = 0;
    while (start <= cleaned.size()) {
        auto end = cleaned.find_first_of("xX", start);
        if (end == std::string::npos)
            end = cleaned.size();
        const std::string_view part = std::string_view(cleaned).substr(start, end - start);
        const auto caret = part.find('^');
        Factor f;
        f.n = detail::parse_int(part.substr(0, caret), "factor size");
        f.t = caret == std::string_view::npos ? 1 : detail::parse_int(part.substr(caret + 1), "factor exponent");
        factors.push_back(f);
        start = end + 1;
    }
    return make_graph_spec(std::move(factors));
}

/// Flat file form of an ordering: header, optional "# key: value" metadata, N rows.
struct OrderingDocument {
    GraphSpec spec;
    std::vector<std::vector<int>> rows;
    std::map<std::string, std::string> metadata;

    Ordering to_ordering() const
    {
        std::vector<Vertex> vertices;
        vertices.reserve(rows.size());
        for (const auto &r : rows)
            vertices.emplace_back(r);
        return Ordering(spec, std::move(vertices));
    }

    static OrderingDocument from_ordering(const Ordering &o, std::map<std::string, std::string> metadata = {})
    {
        OrderingDocument doc{o.spec(), {}, std::move(metadata)};
        for (const auto &row : o.rows())
            doc.rows.emplace_back(row.begin(), row.end());
        return doc;
    }

    friend bool operator==(const OrderingDocument &, const OrderingDocument &) = default;
};

inline std::string serialize_text(const OrderingDocument &doc)
{
    std::string out = "spec: " + doc.spec.to_string() + "\n";
    for (const auto &[key, value] : doc.metadata)
        out += "# " + key + ": " + value + "\n";
    for (const auto &row : doc.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j)
                out += ' ';
            out += std::to_string(row[j]);
        }
        out += '\n';
    }
    return out;
}

/// Reads the header and rows. Throws ParseError on malformed text; row widths and
/// value ranges are checked against the spec (ShapeError is reported as ParseError).
inline OrderingDocument parse_text(std::string_view text)
{
    const auto lines = detail::lines_of(text);
    std::size_t i = 0;
    while (i < lines.size() && detail::trim(lines[i]).empty())
        ++i;
    if (i == lines.size())
        throw Error(Errc::ParseError, "empty document");
    const auto header = detail::trim(lines[i]);
    if (header.substr(0, 5) != "spec:")
        throw Error(Errc::ParseError, "first line must be 'spec: ...'");
    OrderingDocument doc{parse_spec(header.substr(5)), {}, {}};
    const auto t = static_cast<std::size_t>(doc.spec.dimension());

    for (++i; i < lines.size(); ++i) {
        const auto line = detail::trim(lines[i]);
        if (line.empty())
            continue;
        if (line.front() == '#') {
            const auto body = detail::trim(line.substr(1));
            const auto colon = body.find(':');
            if (colon != std::string_view::npos)
                doc.metadata[std::string(detail::trim(body.substr(0, colon)))] =
                    std::string(detail::trim(body.substr(colon + 1)));
            continue;
        }
        std::vector<int> row;
        for (auto token : detail::split_whitespace(line))
            row.push_back(detail::parse_int(token, "coordinate"));
        if (row.size() != t)
            throw Error(Errc::ParseError, "line " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                                              " entries, expected " + std::to_string(t));
        for (std::size_t j = 0; j < t; ++j)
            if (row[j] < 1 || row[j] > doc.spec.alphabet(j))
                throw Error(Errc::ParseError, "line " + std::to_string(i + 1) + " column " + std::to_string(j + 1) +
                                                  " value " + std::to_string(row[j]) + " out of range");
        doc.rows.push_back(std::move(row));
    }
    if (doc.rows.size() != doc.spec.vertex_count())
        throw Error(Errc::ParseError, "expected " + std::to_string(doc.spec.vertex_count()) + " rows, found " +
                                          std::to_string(doc.rows.size()));
    return doc;
}

inline nlohmann::json to_json(const OrderingDocument &doc)
{
    nlohmann::json factors = nlohmann::json::array();
    for (const auto &f : doc.spec.factors())
        factors.push_back({f.n, f.t});
    return {{"spec", factors}, {"rows", doc.rows}, {"metadata", doc.metadata}};
}

inline OrderingDocument from_json(const nlohmann::json &j)
{
    try {
        std::vector<Factor> factors;
        for (const auto &f : j.at("spec"))
            factors.push_back({f.at(0).get<int>(), f.at(1).get<int>()});
        OrderingDocument doc{make_graph_spec(std::move(factors)), j.at("rows").get<std::vector<std::vector<int>>>(),
                             {}};
        if (j.contains("metadata"))
            doc.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
        // Reuse the text checks for widths and ranges.
        return parse_text(serialize_text(doc));
    } catch (const nlohmann::json::exception &e) {
        throw Error(Errc::ParseError, std::string("bad JSON document: ") + e.what());
    }
}

/// Text or JSON, detected from the first non-blank character.
inline OrderingDocument parse_document(std::string_view text)
{
    const auto body = detail::trim(text);
    if (!body.empty() && body.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(body);
        } catch (const nlohmann::json::exception &e) {
            throw Error(Errc::ParseError, std::string("bad JSON document: ") + e.what());
        }
        return from_json(j);
    }
    return parse_text(text);
}

inline nlohmann::json to_json(const ViolationReport &r)
{
    nlohmann::json j{{"kind", kind_name(r.kind)}, {"detail", r.detail}};
    std::visit(
        [&](const auto &k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, RadioViolation>)
                j.update({{"row", k.row}, {"back", k.back}, {"shared", k.shared}});
            else if constexpr (std::is_same_v<K, Repetition>)
                j.update({{"first", k.first}, {"second", k.second}});
            else if constexpr (std::is_same_v<K, NonConsecutive>)
                j.update({{"first_gap", k.first_gap}});
            else if constexpr (std::is_same_v<K, LabelConflict>)
                j.update({{"u", std::vector<int>(k.u.begin(), k.u.end())},
                          {"v", std::vector<int>(k.v.begin(), k.v.end())},
                          {"difference", k.difference},
                          {"required", k.required}});
            else if constexpr (std::is_same_v<K, BoundaryShare>)
                j.update({{"row", k.row}, {"offset", k.offset}, {"shared", k.shared}, {"expected", k.expected}});
            else
                j.update({{"row", k.row}, {"window", k.window}, {"columns", k.columns}});
        },
        r.kind);
    return j;
}

/// Builtin generator of `kind` for every column of `spec`.
inline std::vector<InstructionGenerator> column_generators(const GraphSpec &spec, GeneratorKind kind)
{
    std::vector<InstructionGenerator> gens;
    for (int n : spec.alphabets())
        gens.push_back(builtin_generator(kind, n));
    return gens;
}

struct InstructionDocument {
    GraphSpec spec;
    std::vector<std::vector<Permutation>> rows;
};

/// Instruction file: "spec: ..." header, then N rows of t tokens. A token is
/// "id", "fK" (resolved against the column's instruction set at that row) or a
/// permutation in cycle/one-line notation without spaces, e.g. "(123)".
inline InstructionDocument parse_instruction_text(std::string_view text, GeneratorKind kind)
{
    const auto lines = detail::lines_of(text);
    std::size_t i = 0;
    while (i < lines.size() && (detail::trim(lines[i]).empty() || detail::trim(lines[i]).front() == '#'))
        ++i;
    if (i == lines.size() || detail::trim(lines[i]).substr(0, 5) != "spec:")
        throw Error(Errc::ParseError, "instruction file must start with 'spec: ...'");
    InstructionDocument doc{parse_spec(detail::trim(lines[i]).substr(5)), {}};
    const auto gens = column_generators(doc.spec, kind);
    const auto t = static_cast<std::size_t>(doc.spec.dimension());

    std::vector<std::vector<Permutation>> columns(t);
    for (++i; i < lines.size(); ++i) {
        const auto line = detail::trim(lines[i]);
        if (line.empty() || line.front() == '#')
            continue;
        const auto tokens = detail::split_whitespace(line);
        if (tokens.size() != t)
            throw Error(Errc::ParseError, "line " + std::to_string(i + 1) + " has " + std::to_string(tokens.size()) +
                                              " instructions, expected " + std::to_string(t));
        std::vector<Permutation> row;
        for (std::size_t j = 0; j < t; ++j) {
            const auto token = tokens[j];
            const int n = doc.spec.alphabet(j);
            Permutation sigma;
            if (token == "id") {
                sigma = Permutation::identity(n);
            } else if (token.size() > 1 && (token[0] == 'f' || token[0] == 'F')) {
                const int k = detail::parse_int(token.substr(1), "instruction subscript");
                if (columns[j].empty())
                    throw Error(Errc::ParseError, "line " + std::to_string(i + 1) + ": row 1 must be id");
                if (k < 2 || k > n)
                    throw Error(Errc::ParseError, "subscript f" + std::to_string(k) + " outside 2.." +
                                                      std::to_string(n));
                sigma = gens[j].at(columns[j].size() + 1, columns[j]).f(k);
            } else {
                sigma = parse_permutation(token, n);
            }
            columns[j].push_back(sigma);
            row.push_back(std::move(sigma));
        }
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

/// Inverse of parse_instruction_text for a materialized order-generator, using subscripts.
template <typename OrderGeneratorT>
std::string serialize_instruction_text(const OrderGeneratorT &og)
{
    std::string out = "spec: " + og.spec().to_string() + "\n";
    for (std::size_t i = 0; i < og.size(); ++i) {
        for (std::size_t j = 0; j < static_cast<std::size_t>(og.spec().dimension()); ++j) {
            if (j)
                out += ' ';
            out += i == 0 ? std::string("id") : "f" + std::to_string(og.subscript(i, j));
        }
        out += '\n';
    }
    return out;
}

} // namespace hamming_radio
