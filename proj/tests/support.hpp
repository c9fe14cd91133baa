#pragma once

// Reference implementations used as independent oracles. They work straight
// from the definitions (labels, distances, permutation actions) and share no
// code with the library beyond the plain data types.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hamming_radio/hamming_radio.hpp"

namespace testing_support {

namespace hr = hamming_radio;

using Rows = std::vector<std::vector<int>>;

inline std::string data_path(const std::string &name) { return std::string(HR_TEST_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline hr::Ordering load_ordering(const std::string &name)
{
    return hr::parse_text(slurp(data_path(name))).to_ordering();
}

inline Rows rows_of(const hr::Ordering &o)
{
    Rows out;
    for (const auto &v : o.rows())
        out.emplace_back(v.coords().begin(), v.coords().end());
    return out;
}

inline hr::Ordering make_ordering(const hr::GraphSpec &spec, const Rows &rows)
{
    std::vector<hr::Vertex> vs;
    for (const auto &r : rows)
        vs.emplace_back(r);
    return hr::Ordering(spec, std::move(vs));
}

inline int ref_distance(const std::vector<int> &a, const std::vector<int> &b)
{
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += a[i] != b[i];
    return d;
}

/// Labels by trying every candidate value from the previous label upward and
/// checking the radio inequality against all earlier vertices.
inline std::vector<std::int64_t> stepwise_labels(const Rows &rows, int diameter)
{
    std::vector<std::int64_t> labels;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::int64_t candidate = labels.empty() ? 1 : labels.back() + 1;
        for (;; ++candidate) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = candidate - labels[j] >= diameter + 1 - ref_distance(rows[i], rows[j]);
            if (ok)
                break;
        }
        labels.push_back(candidate);
    }
    return labels;
}

/// Consecutive radio labeling test for an ordering, straight from the definition.
inline bool ref_is_consecutive_radio(const Rows &rows, int diameter)
{
    std::set<std::vector<int>> seen(rows.begin(), rows.end());
    if (seen.size() != rows.size())
        return false;
    const auto labels = stepwise_labels(rows, diameter);
    return labels.back() == static_cast<std::int64_t>(rows.size());
}

inline std::vector<std::vector<int>> all_vertices(const std::vector<int> &alphabets)
{
    std::vector<std::vector<int>> out{{}};
    for (int n : alphabets) {
        std::vector<std::vector<int>> next;
        for (const auto &prefix : out)
            for (int v = 1; v <= n; ++v) {
                auto p = prefix;
                p.push_back(v);
                next.push_back(std::move(p));
            }
        out = std::move(next);
    }
    return out;
}

/// Whether any ordering of the vertex set induces a consecutive radio labeling (tiny graphs only).
inline bool ref_graceful(const std::vector<int> &alphabets)
{
    auto verts = all_vertices(alphabets);
    std::sort(verts.begin(), verts.end());
    const int t = static_cast<int>(alphabets.size());
    do {
        if (ref_is_consecutive_radio(verts, t))
            return true;
    } while (std::next_permutation(verts.begin(), verts.end()));
    return false;
}

/// Applies a permutation given in one-line form (1-based images) to an arrangement:
/// the entry at position p moves to position perm[p].
inline std::vector<int> ref_act(const std::vector<int> &perm, const std::vector<int> &arr)
{
    std::vector<int> out(arr.size());
    for (std::size_t p = 0; p < arr.size(); ++p)
        out[static_cast<std::size_t>(perm[p] - 1)] = arr[p];
    return out;
}

inline std::vector<int> one_line(const hr::Permutation &p)
{
    const auto v = p.one_line();
    return {v.begin(), v.end()};
}

/// Front entries of the successive arrangements, computed with ref_act.
inline std::vector<int> ref_phi(const std::vector<hr::Permutation> &column, int n)
{
    std::vector<int> arr(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        arr[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> out;
    for (const auto &sigma : column) {
        arr = ref_act(one_line(sigma), arr);
        out.push_back(arr[0]);
    }
    return out;
}

/// Random legal instruction column of length len (identity, f2, then draws).
inline std::vector<hr::Permutation> random_column(const hr::InstructionGenerator &gen, std::size_t len,
                                                  std::mt19937_64 &rng)
{
    std::vector<hr::Permutation> col{hr::Permutation::identity(gen.n())};
    if (len >= 2)
        col.push_back(gen.at(2, col).f(2));
    std::uniform_int_distribution<int> pick(2, gen.n());
    while (col.size() < len) {
        const auto set = gen.at(col.size() + 1, col);
        col.push_back(set.f(pick(rng)));
    }
    return col;
}

struct CliResult {
    int exit_code;
    std::string out;
};

/// Runs the CLI through the shell, capturing stdout; stderr goes to /dev/null unless merged.
inline CliResult run_cli(const std::string &args, bool merge_stderr = false)
{
    const std::string cmd = std::string("\"") + HR_CLI_PATH + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    while (const auto n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace testing_support
