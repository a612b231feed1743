#pragma once
#include <string>
#include <vector>

#include "annulus/algebra.hpp"

namespace annulus {

struct Letter {
    int arrow = 0;
    bool inv = false;
    auto operator<=>(const Letter&) const = default;
    Letter inverse() const { return {arrow, !inv}; }
};

// Letters are stored in walk order starting from `start`. The printed form reads
// right to left, so the first walked letter is printed last.
struct Word {
    enum class Kind { Finite, NString, ZPeriodic };
    Kind kind = Kind::Finite;
    int start = 0;
    std::vector<Letter> pre;     // finite part (the whole word when Finite)
    std::vector<Letter> period;  // NString: repeated after pre; ZPeriodic: the cycle from start

    static Word trivial(int v) { return Word{Kind::Finite, v, {}, {}}; }
    bool operator==(const Word&) const = default;
    size_t length() const { return pre.size(); }
};

struct WordError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int letter_src(const Presentation& P, const Letter& l);
int letter_tgt(const Presentation& P, const Letter& l);
int word_end(const Presentation& P, const Word& w);  // finite words only

// Checks composability and the two string conditions for a consecutive letter pair.
bool letters_compatible(const Presentation& P, const Letter& x, const Letter& y);
bool is_valid(const Presentation& P, const Word& w);
void require_valid(const Presentation& P, const Word& w);

Word inverse(const Presentation& P, const Word& w);  // finite words
// Vertex sequence i_0..i_n of a finite word.
std::vector<int> vertices_of(const Presentation& P, const Word& w);
// The first `len` walked letters (finite words give at most their length).
std::vector<Letter> expand(const Word& w, size_t len);

// Shortest preperiod, period rotated accordingly.
Word canonical_nstring(const Presentation& P, const Word& w);
// Canonical identity of a finite word up to inversion.
Word canonical_finite(const Presentation& P, const Word& w);

struct Run {
    bool direct;
    std::vector<Letter> letters;  // walk order
};
std::vector<Run> factorize(const Word& w);

std::string to_string(const Presentation& P, const Word& w);
std::string to_string(const Presentation& P, const std::vector<Letter>& letters);  // printed order
Word parse_word(const Presentation& P, const std::string& text);

// All valid finite words with at most `max_len` letters, one per inversion class.
std::vector<Word> enumerate_words(const Presentation& P, int max_len);

}  // namespace annulus
