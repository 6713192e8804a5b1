#include "staircase/sorting_network.hpp"

#include <algorithm>
#include <charconv>
#include <climits>

#include "staircase/error.hpp"

namespace staircase {

ReducedWord::ReducedWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters))
{
    if (n_ < 2) fail(ErrorKind::OutOfRange, "a word needs n >= 2");
    for (int a : letters_)
        if (a < 1 || a > n_ - 1)
            fail(ErrorKind::OutOfRange, "letter " + std::to_string(a) + " outside 1.." + std::to_string(n_ - 1));
}

ReducedWord ReducedWord::parse(std::string_view text, int n)
{
    std::vector<int> letters;
    if (text.find(',') == std::string_view::npos && text.find(' ') == std::string_view::npos && text.size() > 1) {
        // Compact form "121321", one digit per letter.
        for (char ch : text) {
            if (ch < '1' || ch > '9') fail(ErrorKind::ParseError, "bad letter '" + std::string(1, ch) + "'");
            letters.push_back(ch - '0');
        }
        text = {};
    }
    while (!text.empty()) {
        auto comma = text.find(',');
        auto token = text.substr(0, comma);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            fail(ErrorKind::ParseError, "bad letter '" + std::string(token) + "'");
        letters.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (n == 0) n = letters.empty() ? 2 : *std::max_element(letters.begin(), letters.end()) + 1;
    return ReducedWord(n, std::move(letters));
}

std::string ReducedWord::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(letters_[i]);
    }
    return out;
}

Permutation::Permutation(std::vector<int> one_line) : v_(std::move(one_line))
{
    std::vector<char> seen(v_.size() + 1, 0);
    for (int x : v_) {
        if (x < 1 || x > static_cast<int>(v_.size()) || seen[static_cast<std::size_t>(x)])
            fail(ErrorKind::OutOfRange, "not a permutation");
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) inv[static_cast<std::size_t>(v_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

std::string Permutation::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v_[i]);
    }
    return out;
}

Permutation apply_prefix(const ReducedWord& w, int k)
{
    if (k < 0 || k > w.length()) fail(ErrorKind::OutOfRange, "prefix length " + std::to_string(k));
    auto v = Permutation::identity(w.n()).one_line();
    for (int m = 1; m <= k; ++m) {
        auto c = static_cast<std::size_t>(w.letter(m));
        std::swap(v[c - 1], v[c]);
    }
    return Permutation(std::move(v));
}

namespace {

// Right-to-left scan: `middle` is the largest value already popped by a
// larger value to its left, i.e. a candidate "2" with a "3" before it.
bool has_132(const std::vector<int>& v)
{
    std::vector<int> stack;
    int middle = INT_MIN;
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        if (*it < middle) return true;
        while (!stack.empty() && stack.back() < *it) {
            middle = std::max(middle, stack.back());
            stack.pop_back();
        }
        stack.push_back(*it);
    }
    return false;
}

}  // namespace

bool contains_132(const Permutation& p)
{
    return has_132(p.one_line());
}

bool contains_312(const Permutation& p)
{
    // 312 in p is 132 in the complement n+1-p.
    auto v = p.one_line();
    int n = p.size();
    for (int& x : v) x = n + 1 - x;
    return has_132(v);
}

namespace {

template <class Check>
bool network_with(const ReducedWord& w, Check&& bad_prefix)
{
    int n = w.n();
    if (w.length() != n * (n - 1) / 2) return false;
    auto v = Permutation::identity(n).one_line();
    for (int m = 1; m <= w.length(); ++m) {
        auto c = static_cast<std::size_t>(w.letter(m));
        if (v[c - 1] > v[c]) return false;
        std::swap(v[c - 1], v[c]);
        if (bad_prefix(v)) return false;
    }
    return true;
}

}  // namespace

bool is_sorting_network(const ReducedWord& w)
{
    return network_with(w, [](const std::vector<int>&) { return false; });
}

bool is_132_network(const ReducedWord& w)
{
    return network_with(w, [](const std::vector<int>& v) { return has_132(v); });
}

bool is_312_network(const ReducedWord& w)
{
    return network_with(w, [](const std::vector<int>& v) { return contains_312(Permutation(v)); });
}

RecordingPair eg_forward(const ReducedWord& w)
{
    int n = w.n();
    std::vector<int> height(static_cast<std::size_t>(n) + 1, 0);  // filled cells per column, 1-based
    std::vector<std::vector<int>> rows;
    auto bad = [&](int m, const std::string& why) {
        fail(ErrorKind::NotA132Network, "letter " + std::to_string(m) + ": " + why);
    };
    for (int m = 1; m <= w.length(); ++m) {
        int c = w.letter(m);
        int r = height[static_cast<std::size_t>(c)] + 1;
        if (c + r - 1 > n - 1) bad(m, "column overflows the staircase");
        if (c > 1 && height[static_cast<std::size_t>(c - 1)] < r) bad(m, "west neighbour still empty");
        if (r > 1 && height[static_cast<std::size_t>(c + 1)] < r - 1) bad(m, "shifted north neighbour still empty");
        height[static_cast<std::size_t>(c)] = r;
        if (static_cast<int>(rows.size()) < r) rows.emplace_back();
        rows[static_cast<std::size_t>(r - 1)].push_back(m);
    }
    std::vector<int> parts;
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    try {
        Partition shape(parts);
        Tableau unshifted(shape, DiagramKind::Ordinary, rows);
        Tableau shifted(shape, DiagramKind::Shifted, rows);
        return {std::move(unshifted), std::move(shifted)};
    } catch (const Error& e) {
        fail(ErrorKind::NotA132Network, e.what());
    }
}

ReducedWord eg_inverse(const Tableau& t)
{
    int n = t.shape().length() + 1;
    if (t.kind() != DiagramKind::Shifted || t.shape() != Partition::staircase(n) || t.size() == 0)
        fail(ErrorKind::WrongShape, "expected a shifted staircase tableau, got shape " + t.shape().to_string());
    std::vector<int> letters(static_cast<std::size_t>(t.size()));
    for (int m = 1; m <= t.size(); ++m) {
        Cell u = t.cell_of(m);
        letters[static_cast<std::size_t>(m - 1)] = u.col - u.row + 1;
    }
    return ReducedWord(n, std::move(letters));
}

ReducedWord reverse_network(const ReducedWord& w)
{
    if (!is_132_network(w)) fail(ErrorKind::NotA132Network, w.to_string());
    auto letters = w.letters();
    std::reverse(letters.begin(), letters.end());
    return ReducedWord(w.n(), std::move(letters));
}

Tableau flip_antidiagonal(const Tableau& t)
{
    int n = t.shape().length() + 1;
    if (t.kind() != DiagramKind::Shifted || t.shape() != Partition::staircase(n))
        fail(ErrorKind::WrongShape, "expected a shifted staircase tableau");
    int total = t.size();
    auto rows = t.rows();
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j)
            rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - i)] = total + 1 - t.at({n - j, n - i});
    return Tableau(t.shape(), DiagramKind::Shifted, std::move(rows));
}

Partition RotheDiagram::shape() const
{
    return partition_from_cells(cells, DiagramKind::Ordinary);
}

RotheDiagram rothe_diagram(const Permutation& p)
{
    RotheDiagram d;
    int prefix_min = INT_MAX;
    std::vector<int> height;
    for (int j = 1; j <= p.size(); ++j) {
        prefix_min = std::min(prefix_min, p(j));
        height.push_back(prefix_min - 1);
    }
    for (int i = 1; i <= p.size(); ++i)
        for (int j = 1; j <= p.size(); ++j)
            if (i <= height[static_cast<std::size_t>(j - 1)]) d.cells.push_back({i, j});
    return d;
}

std::vector<int> trajectory(const ReducedWord& w, int i)
{
    if (i < 1 || i > w.n()) fail(ErrorKind::OutOfRange, "element " + std::to_string(i));
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(w.length()) + 1);
    int pos = i;
    out.push_back(pos);
    for (int a : w.letters()) {
        if (pos == a)
            pos = a + 1;
        else if (pos == a + 1)
            pos = a;
        out.push_back(pos);
    }
    return out;
}

std::vector<int> trajectory_from_tableau(const Tableau& t, int m)
{
    int n = t.shape().length() + 1;
    if (t.kind() != DiagramKind::Shifted || t.shape() != Partition::staircase(n))
        fail(ErrorKind::WrongShape, "expected a shifted staircase tableau");
    if (m < 1 || m > n) fail(ErrorKind::OutOfRange, "element " + std::to_string(m));
    // Unshifted cell (i, j) holds t(i, j + i - 1).
    auto label = [&](int i, int j) { return t.at({i, j + i - 1}); };
    std::vector<std::pair<int, int>> events;  // (time, new position)
    for (int i = 1; i <= m - 1; ++i) events.push_back({label(i, m - i), m - i});
    if (m <= n - 1)
        for (int j = 1; j <= n - m; ++j) events.push_back({label(m, j), j + 1});
    std::sort(events.begin(), events.end());
    std::vector<int> out(static_cast<std::size_t>(t.size()) + 1, m);
    std::size_t e = 0;
    int pos = m;
    for (int k = 1; k <= t.size(); ++k) {
        while (e < events.size() && events[e].first == k) pos = events[e++].second;
        out[static_cast<std::size_t>(k)] = pos;
    }
    return out;
}

int swap_letter(const ReducedWord& w, int i, int j)
{
    if (i < 1 || j > w.n() || i >= j)
        fail(ErrorKind::OutOfRange, "need 1 <= i < j <= n, got " + std::to_string(i) + "," + std::to_string(j));
    auto v = Permutation::identity(w.n()).one_line();
    for (int a : w.letters()) {
        auto c = static_cast<std::size_t>(a);
        int x = v[c - 1], y = v[c];
        if ((x == i && y == j) || (x == j && y == i)) return a;
        std::swap(v[c - 1], v[c]);
    }
    fail(ErrorKind::OutOfRange, "values " + std::to_string(i) + " and " + std::to_string(j) + " never meet");
}

namespace {

void extend_words(std::vector<int>& perm, std::vector<int>& word, int target, int n, std::vector<ReducedWord>& out)
{
    if (static_cast<int>(word.size()) == target) {
        out.emplace_back(n, word);
        return;
    }
    for (std::size_t c = 1; c < perm.size(); ++c) {
        if (perm[c - 1] > perm[c]) continue;
        std::swap(perm[c - 1], perm[c]);
        word.push_back(static_cast<int>(c));
        extend_words(perm, word, target, n, out);
        word.pop_back();
        std::swap(perm[c - 1], perm[c]);
    }
}

}  // namespace

std::vector<ReducedWord> all_sorting_networks(int n)
{
    if (n < 2 || n > 6) fail(ErrorKind::OutOfRange, "exhaustive sorting networks need 2 <= n <= 6");
    auto perm = Permutation::identity(n).one_line();
    std::vector<int> word;
    std::vector<ReducedWord> out;
    extend_words(perm, word, n * (n - 1) / 2, n, out);
    return out;
}

}  // namespace staircase
