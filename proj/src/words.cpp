#include "cfst/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfst {

namespace {
constexpr std::size_t kMaxWordLength = std::size_t{1} << 28;

void check_length(std::size_t n) {
    if (n > kMaxWordLength) throw std::length_error("word length exceeds builtin cap");
}
}  // namespace

Letter InfiniteWord::letter_at(std::size_t i) const {
    if (i == 0) throw std::out_of_range("letters are 1-indexed");
    return src_->prefix(i).back();
}

FiniteWord word_power(const FiniteWord& w, const BigRat& x) {
    if (w.empty()) throw std::invalid_argument("empty root");
    if (x <= 0) throw std::invalid_argument("word power needs a positive exponent");
    const BigInt whole = rat_floor(x);
    const BigRat frac = x - BigRat(whole);
    const BigInt extra_big = rat_ceil(frac * BigInt(w.size()));
    const BigInt total_big = whole * BigInt(w.size()) + extra_big;
    if (total_big > kMaxWordLength) throw std::length_error("word power too long");
    const auto whole_n = whole.convert_to<std::size_t>();
    const auto extra = extra_big.convert_to<std::size_t>();

    FiniteWord out;
    out.reserve(whole_n * w.size() + extra);
    for (std::size_t i = 0; i < whole_n; ++i) out.insert(out.end(), w.begin(), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(extra));
    return out;
}

// --- Morphism ---------------------------------------------------------------

Morphism::Morphism(std::map<Letter, FiniteWord> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("morphism with empty alphabet");
    std::optional<std::size_t> width;
    bool uniform = true;
    for (const auto& [letter, image] : images_) {
        (void)letter;
        for (Letter b : image)
            if (!images_.count(b))
                throw std::invalid_argument("morphism image uses unknown letter " + std::to_string(b));
        if (!width) width = image.size();
        else if (*width != image.size()) uniform = false;
    }
    if (uniform && width && *width > 0) uniform_ = width;
}

const FiniteWord& Morphism::image(Letter a) const {
    auto it = images_.find(a);
    if (it == images_.end())
        throw std::invalid_argument("letter " + std::to_string(a) + " outside morphism alphabet");
    return it->second;
}

std::vector<Letter> Morphism::alphabet() const {
    std::vector<Letter> out;
    out.reserve(images_.size());
    for (const auto& [letter, image] : images_) out.push_back(letter);
    return out;
}

FiniteWord Morphism::apply(const FiniteWord& w) const {
    std::size_t total = 0;
    for (Letter a : w) total += image(a).size();
    check_length(total);
    FiniteWord out;
    out.reserve(total);
    for (Letter a : w) {
        const FiniteWord& img = image(a);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

// --- Coding -----------------------------------------------------------------

Coding Coding::identity(const std::vector<Letter>& alphabet) {
    std::map<Letter, Letter> m;
    for (Letter a : alphabet) m[a] = a;
    return Coding(std::move(m));
}

Letter Coding::apply(Letter a) const {
    auto it = map_.find(a);
    if (it == map_.end())
        throw std::invalid_argument("letter " + std::to_string(a) + " outside coding domain");
    return it->second;
}

FiniteWord Coding::apply(const FiniteWord& w) const {
    FiniteWord out;
    out.reserve(w.size());
    for (Letter a : w) out.push_back(apply(a));
    return out;
}

// --- DFAO -------------------------------------------------------------------

void Dfao::validate() const {
    if (base < 2) throw std::invalid_argument("dfao base must be >= 2");
    const std::size_t n = num_states();
    if (n == 0) throw std::invalid_argument("dfao needs at least one state");
    if (initial >= n) throw std::invalid_argument("dfao initial state out of range");
    if (transitions.size() != n) throw std::invalid_argument("dfao transition table incomplete");
    for (const auto& row : transitions) {
        if (row.size() != static_cast<std::size_t>(base))
            throw std::invalid_argument("dfao transition row must cover digits 0..base-1");
        for (std::size_t target : row)
            if (target >= n) throw std::invalid_argument("dfao transition to unknown state");
    }
}

Letter automatic_letter(const Dfao& d, std::uint64_t n) {
    // Base-k digits, most significant first; n = 0 is the empty string.
    std::uint64_t digits[64 + 1];
    int len = 0;
    while (n > 0) {
        digits[len++] = n % static_cast<std::uint64_t>(d.base);
        n /= static_cast<std::uint64_t>(d.base);
    }
    std::size_t state = d.initial;
    for (int i = len - 1; i >= 0; --i) state = d.transitions[state][digits[i]];
    return d.output[state];
}

// --- generators --------------------------------------------------------------

namespace {

class EventuallyPeriodicSource final : public WordSource {
  public:
    EventuallyPeriodicSource(FiniteWord pre, FiniteWord cycle, WordKind kind)
        : pre_(std::move(pre)), cycle_(std::move(cycle)), kind_(kind) {
        if (cycle_.empty()) throw std::invalid_argument("empty period");
    }
    WordKind kind() const override { return kind_; }
    FiniteWord prefix(std::size_t n) const override {
        check_length(n);
        FiniteWord out;
        out.reserve(n);
        for (std::size_t i = 0; i < n && i < pre_.size(); ++i) out.push_back(pre_[i]);
        while (out.size() < n) out.push_back(cycle_[(out.size() - pre_.size()) % cycle_.size()]);
        return out;
    }

  private:
    FiniteWord pre_, cycle_;
    WordKind kind_;
};

class ExplicitPrefixSource final : public WordSource {
  public:
    explicit ExplicitPrefixSource(FiniteWord letters) : letters_(std::move(letters)) {}
    WordKind kind() const override { return WordKind::ExplicitPrefix; }
    FiniteWord prefix(std::size_t n) const override {
        if (n > letters_.size()) throw std::out_of_range("explicit prefix exhausted");
        return FiniteWord(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n));
    }

  private:
    FiniteWord letters_;
};

class AutomaticSource final : public WordSource {
  public:
    explicit AutomaticSource(Dfao d) : dfao_(std::move(d)) { dfao_.validate(); }
    WordKind kind() const override { return WordKind::Automatic; }
    FiniteWord prefix(std::size_t n) const override {
        check_length(n);
        FiniteWord out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(automatic_letter(dfao_, i));
        return out;
    }

  private:
    Dfao dfao_;
};

class SturmianSource final : public WordSource {
  public:
    explicit SturmianSource(std::vector<int> directives) : directives_(std::move(directives)) {
        if (directives_.empty()) throw std::invalid_argument("sturmian needs at least one directive");
        for (int d : directives_)
            if (d < 1) throw std::invalid_argument("sturmian directives must be positive");
    }
    WordKind kind() const override { return WordKind::SturmianStandard; }
    FiniteWord prefix(std::size_t n) const override {
        check_length(n);
        FiniteWord prev = {1};  // s_{-1}
        FiniteWord cur = {0};   // s_0
        std::size_t step = 0;
        while (cur.size() < n) {
            const int d = directives_[step % directives_.size()];
            ++step;
            FiniteWord next;
            next.reserve(cur.size() * static_cast<std::size_t>(d) + prev.size());
            for (int i = 0; i < d; ++i) next.insert(next.end(), cur.begin(), cur.end());
            next.insert(next.end(), prev.begin(), prev.end());
            check_length(next.size());
            prev = std::move(cur);
            cur = std::move(next);
        }
        cur.resize(n);
        return cur;
    }

  private:
    std::vector<int> directives_;
};

class CodedSource final : public WordSource {
  public:
    CodedSource(InfiniteWord inner, Coding phi) : inner_(std::move(inner)), phi_(std::move(phi)) {}
    WordKind kind() const override { return inner_.kind(); }
    FiniteWord prefix(std::size_t n) const override { return phi_.apply(inner_.prefix(n)); }

  private:
    InfiniteWord inner_;
    Coding phi_;
};

class FixedPointSource final : public WordSource {
  public:
    FixedPointSource(Morphism sigma, Letter a) : sigma_(std::move(sigma)), start_(a) {}
    WordKind kind() const override { return WordKind::MorphicFixedPoint; }
    FiniteWord prefix(std::size_t n) const override {
        check_length(n);
        if (n == 0) return {};
        // The fixed point x satisfies x = sigma(x_1) sigma(x_2) ..., so the
        // prefix unfolds letter by letter in O(n).
        FiniteWord buf = sigma_.image(start_);
        for (std::size_t i = 1; buf.size() < n; ++i) {
            if (i >= buf.size())
                throw std::logic_error("fixed point stalled; morphism was not prolongable");
            const FiniteWord& img = sigma_.image(buf[i]);
            buf.insert(buf.end(), img.begin(), img.end());
        }
        buf.resize(n);
        return buf;
    }

  private:
    Morphism sigma_;
    Letter start_;
};

}  // namespace

InfiniteWord periodic_word(FiniteWord cycle) {
    return InfiniteWord(std::make_shared<EventuallyPeriodicSource>(FiniteWord{}, std::move(cycle),
                                                                   WordKind::Periodic));
}

InfiniteWord eventually_periodic_word(FiniteWord preperiod, FiniteWord cycle) {
    return InfiniteWord(std::make_shared<EventuallyPeriodicSource>(std::move(preperiod), std::move(cycle),
                                                                   WordKind::EventuallyPeriodic));
}

InfiniteWord explicit_prefix_word(FiniteWord letters) {
    return InfiniteWord(std::make_shared<ExplicitPrefixSource>(std::move(letters)));
}

InfiniteWord automatic_word(const Dfao& d) {
    return InfiniteWord(std::make_shared<AutomaticSource>(d));
}

InfiniteWord sturmian_standard(std::vector<int> directives) {
    return InfiniteWord(std::make_shared<SturmianSource>(std::move(directives)));
}

InfiniteWord coded_word(const InfiniteWord& u, const Coding& phi) {
    return InfiniteWord(std::make_shared<CodedSource>(u, phi));
}

// --- morphic machinery --------------------------------------------------------

FiniteWord morphism_iterate(const Morphism& sigma, Letter a, unsigned n) {
    FiniteWord w = {a};
    if (!sigma.contains(a))
        throw std::invalid_argument("letter " + std::to_string(a) + " outside morphism alphabet");
    for (unsigned i = 0; i < n; ++i) w = sigma.apply(w);
    return w;
}

std::set<Letter> mortal_letters(const Morphism& sigma) {
    std::set<Letter> mortal;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [letter, image] : sigma.images()) {
            if (mortal.count(letter)) continue;
            bool dies = true;
            for (Letter b : image)
                if (!mortal.count(b)) { dies = false; break; }
            if (dies) {
                mortal.insert(letter);
                changed = true;
            }
        }
    }
    return mortal;
}

bool is_prolongable(const Morphism& sigma, Letter a) {
    const FiniteWord& img = sigma.image(a);
    if (img.size() < 2 || img.front() != a) return false;
    const auto mortal = mortal_letters(sigma);
    for (std::size_t i = 1; i < img.size(); ++i)
        if (!mortal.count(img[i])) return true;
    return false;
}

InfiniteWord fixed_point(const Morphism& sigma, Letter a) {
    if (!is_prolongable(sigma, a))
        throw std::invalid_argument("morphism not prolongable at letter " + std::to_string(a));
    return InfiniteWord(std::make_shared<FixedPointSource>(sigma, a));
}

namespace {

// Letter counts capped at 2 ("occurs at least twice" is all that matters).
using CappedCounts = std::map<Letter, int>;

int capped_get(const CappedCounts& c, Letter x) {
    auto it = c.find(x);
    return it == c.end() ? 0 : it->second;
}

CappedCounts capped_counts(const FiniteWord& w) {
    CappedCounts out;
    for (Letter a : w) {
        int& v = out[a];
        v = std::min(2, v + 1);
    }
    return out;
}

// Counts of sigma(u) from capped counts of u. Saturating aggregation at 2 is
// exact for the "at least twice" question: any term that saturates forces
// the true total to be >= 2 as well.
CappedCounts capped_step(const Morphism& sigma, const CappedCounts& u) {
    CappedCounts out;
    for (const auto& [letter, mult] : u) {
        for (Letter b : sigma.image(letter)) {
            int& v = out[b];
            v = std::min(2, v + mult);
        }
    }
    return out;
}

}  // namespace

bool is_recurrent_generator(const Morphism& sigma, Letter a) {
    if (!is_prolongable(sigma, a))
        throw std::invalid_argument("morphism not prolongable at letter " + std::to_string(a));

    // Fixed point = a · W · sigma(W) · sigma^2(W) · ...  Exact occurrence
    // counts capped at 2 are accumulated per block. The capped count vectors
    // live in a finite set, so the block sequence is eventually periodic;
    // a letter appearing in any block of the cycle appears in infinitely
    // many blocks, hence at least twice. Letters confined to the pre-cycle
    // blocks get their exact (capped) totals. This closes the gap between
    // the definition's quantification over the whole infinite word and a
    // finite computation.
    const FiniteWord& img = sigma.image(a);
    const FiniteWord tail(img.begin() + 1, img.end());

    std::vector<CappedCounts> blocks = {capped_counts(tail)};
    std::map<CappedCounts, std::size_t> seen = {{blocks[0], 0}};
    std::size_t cycle_start = 0;
    for (;;) {
        CappedCounts next = capped_step(sigma, blocks.back());
        auto it = seen.find(next);
        if (it != seen.end()) {
            cycle_start = it->second;
            break;
        }
        seen.emplace(next, blocks.size());
        blocks.push_back(std::move(next));
    }

    std::set<Letter> occurring = {a};
    std::set<Letter> in_cycle;
    for (std::size_t k = 0; k < blocks.size(); ++k)
        for (const auto& [letter, mult] : blocks[k]) {
            if (mult > 0) occurring.insert(letter);
            if (k >= cycle_start && mult > 0) in_cycle.insert(letter);
        }

    for (Letter x : occurring) {
        if (in_cycle.count(x)) continue;  // infinitely many block occurrences
        int total = (x == a) ? 1 : 0;
        for (std::size_t k = 0; k < cycle_start && total < 2; ++k)
            total = std::min(2, total + capped_get(blocks[k], x));
        if (total < 2) return false;
    }
    return true;
}

// --- text formats ---------------------------------------------------------------

namespace {

Letter parse_letter_char(char c, const std::string& text, std::size_t pos) {
    if (c < '0' || c > '9')
        throw std::invalid_argument("bad letter '" + std::string(1, c) + "' at position " +
                                    std::to_string(pos) + " in \"" + text + "\" (letters are digits 0-9)");
    return c - '0';
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(sep, start);
        if (end == std::string::npos) end = text.size();
        parts.push_back(text.substr(start, end - start));
        start = end + 1;
        if (end == text.size()) break;
    }
    return parts;
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

Morphism parse_morphism(const std::string& text) {
    std::map<Letter, FiniteWord> images;
    for (const std::string& raw : split(text, ';')) {
        const std::string rule = strip(raw);
        if (rule.empty()) continue;
        const std::size_t arrow = rule.find("->");
        if (arrow == std::string::npos || arrow == 0)
            throw std::invalid_argument("morphism rule missing '->': \"" + rule + "\"");
        const std::string lhs = strip(rule.substr(0, arrow));
        const std::string rhs = strip(rule.substr(arrow + 2));
        if (lhs.size() != 1)
            throw std::invalid_argument("morphism rule needs a single source letter: \"" + rule + "\"");
        const Letter src = parse_letter_char(lhs[0], text, text.find(lhs));
        if (images.count(src))
            throw std::invalid_argument("duplicate morphism rule for letter " + lhs);
        FiniteWord img;
        for (std::size_t i = 0; i < rhs.size(); ++i) img.push_back(parse_letter_char(rhs[i], text, i));
        images.emplace(src, std::move(img));
    }
    if (images.empty()) throw std::invalid_argument("empty morphism spec");
    return Morphism(std::move(images));  // constructor rejects unknown image letters
}

Coding parse_coding(const std::string& text) {
    std::map<Letter, Letter> map;
    for (const std::string& raw : split(text, ';')) {
        const std::string rule = strip(raw);
        if (rule.empty()) continue;
        const std::size_t arrow = rule.find("=>");
        if (arrow == std::string::npos || arrow == 0)
            throw std::invalid_argument("coding rule missing '=>': \"" + rule + "\"");
        const std::string lhs = strip(rule.substr(0, arrow));
        const std::string rhs = strip(rule.substr(arrow + 2));
        if (lhs.size() != 1 || rhs.size() != 1)
            throw std::invalid_argument("coding rules map single letters: \"" + rule + "\"");
        const Letter src = parse_letter_char(lhs[0], text, 0);
        const Letter dst = parse_letter_char(rhs[0], text, 0);
        if (map.count(src)) throw std::invalid_argument("duplicate coding rule for letter " + lhs);
        map.emplace(src, dst);
    }
    if (map.empty()) throw std::invalid_argument("empty coding spec");
    return Coding(std::move(map));
}

}  // namespace cfst
