#include "annulus/word.hpp"

#include <algorithm>
#include <set>

namespace annulus {

int letter_src(const Presentation& P, const Letter& l) {
    return l.inv ? P.arrows[l.arrow].tgt : P.arrows[l.arrow].src;
}
int letter_tgt(const Presentation& P, const Letter& l) {
    return l.inv ? P.arrows[l.arrow].src : P.arrows[l.arrow].tgt;
}

int word_end(const Presentation& P, const Word& w) {
    return w.pre.empty() ? w.start : letter_tgt(P, w.pre.back());
}

bool letters_compatible(const Presentation& P, const Letter& x, const Letter& y) {
    if (letter_tgt(P, x) != letter_src(P, y)) return false;
    if (x.arrow == y.arrow && x.inv != y.inv) return false;
    if (!x.inv && !y.inv && P.in_rel(y.arrow, x.arrow)) return false;
    if (x.inv && y.inv && P.in_rel(x.arrow, y.arrow)) return false;
    return true;
}

namespace {

bool letter_ok(const Presentation& P, const Letter& l) {
    return l.arrow >= 0 && l.arrow < (int)P.arrows.size() && P.a_alive(l.arrow);
}

bool chain_ok(const Presentation& P, int start, const std::vector<Letter>& ls) {
    if (ls.empty()) return true;
    for (auto& l : ls)
        if (!letter_ok(P, l)) return false;
    if (letter_src(P, ls[0]) != start) return false;
    for (size_t i = 0; i + 1 < ls.size(); ++i)
        if (!letters_compatible(P, ls[i], ls[i + 1])) return false;
    return true;
}

}  // namespace

bool is_valid(const Presentation& P, const Word& w) {
    if (w.start < 0 || w.start >= P.n || !P.v_alive(w.start)) return false;
    switch (w.kind) {
        case Word::Kind::Finite: return chain_ok(P, w.start, w.pre);
        case Word::Kind::NString: {
            if (w.period.empty()) return false;
            std::vector<Letter> ls = w.pre;
            ls.insert(ls.end(), w.period.begin(), w.period.end());
            ls.push_back(w.period[0]);
            return chain_ok(P, w.start, ls);
        }
        case Word::Kind::ZPeriodic: {
            if (w.period.empty()) return false;
            std::vector<Letter> ls = w.period;
            ls.push_back(w.period[0]);
            return w.pre.empty() && chain_ok(P, w.start, ls);
        }
    }
    return false;
}

void require_valid(const Presentation& P, const Word& w) {
    if (!is_valid(P, w)) throw WordError("invalid word");
}

Word inverse(const Presentation& P, const Word& w) {
    if (w.kind != Word::Kind::Finite) throw WordError("inverse of an infinite word");
    Word r = Word::trivial(word_end(P, w));
    for (auto it = w.pre.rbegin(); it != w.pre.rend(); ++it) r.pre.push_back(it->inverse());
    return r;
}

std::vector<int> vertices_of(const Presentation& P, const Word& w) {
    std::vector<int> v{w.start};
    for (auto& l : w.pre) v.push_back(letter_tgt(P, l));
    return v;
}

std::vector<Letter> expand(const Word& w, size_t len) {
    std::vector<Letter> out;
    if (w.kind == Word::Kind::Finite) {
        out.assign(w.pre.begin(), w.pre.begin() + std::min(len, w.pre.size()));
        return out;
    }
    for (size_t i = 0; i < len; ++i) {
        if (i < w.pre.size())
            out.push_back(w.pre[i]);
        else
            out.push_back(w.period[(i - w.pre.size()) % w.period.size()]);
    }
    return out;
}

Word canonical_nstring(const Presentation&, const Word& w0) {
    if (w0.kind != Word::Kind::NString) return w0;
    Word w = w0;
    // primitive period
    size_t s = w.period.size();
    for (size_t d = 1; d < s; ++d) {
        if (s % d) continue;
        bool ok = true;
        for (size_t i = d; i < s && ok; ++i) ok = w.period[i] == w.period[i - d];
        if (ok) {
            w.period.resize(d);
            break;
        }
    }
    while (!w.pre.empty() && w.pre.back() == w.period.back()) {
        w.pre.pop_back();
        std::rotate(w.period.rbegin(), w.period.rbegin() + 1, w.period.rend());
    }
    return w;
}

Word canonical_finite(const Presentation& P, const Word& w) {
    if (w.kind != Word::Kind::Finite) return w;
    Word v = inverse(P, w);
    auto key = [](const Word& x) { return std::make_pair(x.start, x.pre); };
    return key(v) < key(w) ? v : w;
}

std::vector<Run> factorize(const Word& w) {
    std::vector<Letter> ls = w.pre;
    if (w.kind != Word::Kind::Finite) ls.insert(ls.end(), w.period.begin(), w.period.end());
    std::vector<Run> out;
    for (auto& l : ls) {
        if (out.empty() || out.back().direct == l.inv) out.push_back({!l.inv, {}});
        out.back().letters.push_back(l);
    }
    return out;
}

std::string to_string(const Presentation& P, const std::vector<Letter>& letters) {
    std::string s;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        s += P.arrows[it->arrow].name;
        if (it->inv) s += "-";
    }
    return s;
}

std::string to_string(const Presentation& P, const Word& w) {
    switch (w.kind) {
        case Word::Kind::Finite:
            if (w.pre.empty()) return "e" + std::to_string(w.start + 1);
            return to_string(P, w.pre);
        case Word::Kind::NString: return "(" + to_string(P, w.period) + ")*" + to_string(P, w.pre);
        case Word::Kind::ZPeriodic: return "(" + to_string(P, w.period) + ")^Z";
    }
    return "";
}

namespace {

// Printed-order tokens, greedy longest arrow-name match.
std::vector<Letter> tokenize(const Presentation& P, const std::string& t) {
    std::vector<Letter> out;
    size_t i = 0;
    while (i < t.size()) {
        int best = -1;
        size_t blen = 0;
        for (int a = 0; a < (int)P.arrows.size(); ++a) {
            const std::string& nm = P.arrows[a].name;
            if (nm.size() > blen && t.compare(i, nm.size(), nm) == 0) {
                best = a;
                blen = nm.size();
            }
        }
        if (best < 0) throw WordError("unknown letter at '" + t.substr(i) + "'");
        i += blen;
        bool inv = i < t.size() && t[i] == '-';
        if (inv) ++i;
        out.push_back({best, inv});
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

Word parse_word(const Presentation& P, const std::string& text) {
    Word w;
    if (text.size() >= 2 && text[0] == 'e' &&
        std::all_of(text.begin() + 1, text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        w = Word::trivial(std::stoi(text.substr(1)) - 1);
        require_valid(P, w);
        return w;
    }
    if (!text.empty() && text[0] == '(') {
        size_t close = text.find(')');
        if (close == std::string::npos) throw WordError("unbalanced parenthesis");
        std::string per = text.substr(1, close - 1), rest = text.substr(close + 1);
        w.period = tokenize(P, per);
        if (w.period.empty()) throw WordError("empty period");
        if (rest == "^Z") {
            w.kind = Word::Kind::ZPeriodic;
        } else if (!rest.empty() && rest[0] == '*') {
            w.kind = Word::Kind::NString;
            w.pre = tokenize(P, rest.substr(1));
        } else {
            throw WordError("expected '*' or '^Z' after period");
        }
        w.start = letter_src(P, w.pre.empty() ? w.period[0] : w.pre[0]);
    } else {
        w.pre = tokenize(P, text);
        if (w.pre.empty()) throw WordError("empty word");
        w.start = letter_src(P, w.pre[0]);
    }
    require_valid(P, w);
    return w;
}

std::vector<Word> enumerate_words(const Presentation& P, int max_len) {
    std::set<std::pair<int, std::vector<Letter>>> seen;
    std::vector<Word> out;
    std::vector<Word> layer;
    for (int i = 0; i < P.n; ++i)
        if (P.v_alive(i)) layer.push_back(Word::trivial(i));
    for (int len = 0; len <= max_len && !layer.empty(); ++len) {
        std::vector<Word> nxt;
        for (auto& w : layer) {
            Word c = canonical_finite(P, w);
            if (seen.insert({c.start, c.pre}).second) out.push_back(c);
            if (len == max_len) continue;
            int v = word_end(P, w);
            for (int a = 0; a < (int)P.arrows.size(); ++a) {
                if (!P.a_alive(a)) continue;
                for (bool inv : {false, true}) {
                    Letter l{a, inv};
                    if (letter_src(P, l) != v) continue;
                    if (!w.pre.empty() && !letters_compatible(P, w.pre.back(), l)) continue;
                    Word x = w;
                    x.pre.push_back(l);
                    nxt.push_back(x);
                }
            }
        }
        layer = std::move(nxt);
    }
    return out;
}

}  // namespace annulus
