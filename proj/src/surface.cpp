#include "circlerig/surface.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace circlerig {

namespace {

void check_gen(int genus, int gen) {
    if (gen < 0 || gen >= 2 * genus)
        throw UnknownGenerator("generator id " + std::to_string(gen) +
                               " out of range for genus " + std::to_string(genus));
}

int join_genus(const Word& u, const Word& v) {
    if (u.genus() == 0) return v.genus();
    if (v.genus() == 0) return u.genus();
    if (u.genus() != v.genus())
        throw MixedPresentations("words over genus " + std::to_string(u.genus()) +
                                 " and " + std::to_string(v.genus()));
    return u.genus();
}

}  // namespace

Word::Word(int genus, std::vector<Letter> letters) : genus_(genus) {
    letters_.reserve(letters.size());
    for (const Letter& l : letters) {
        if (genus_ > 0) check_gen(genus_, l.gen);
        if (l.exp == 0) continue;
        if (!letters_.empty() && letters_.back().gen == l.gen) {
            letters_.back().exp += l.exp;
            if (letters_.back().exp == 0) {
                letters_.pop_back();
                // the merge may expose a new adjacent pair; re-reduce lazily
                // by continuing: previous letters are already reduced, and the
                // next input letter will be compared against the new back.
            }
        } else {
            letters_.push_back(l);
        }
    }
}

Word Word::generator(const SurfacePresentation& pres, int gen_id, long exp) {
    check_gen(pres.genus, gen_id);
    return Word(pres.genus, {{gen_id, exp}});
}

Word Word::a(const SurfacePresentation& pres, int i, long exp) {
    if (i < 1 || i > pres.genus) throw IndexOutOfRange("a index " + std::to_string(i));
    return generator(pres, 2 * (i - 1), exp);
}

Word Word::b(const SurfacePresentation& pres, int i, long exp) {
    if (i < 1 || i > pres.genus) throw IndexOutOfRange("b index " + std::to_string(i));
    return generator(pres, 2 * (i - 1) + 1, exp);
}

size_t Word::length() const {
    size_t n = 0;
    for (const Letter& l : letters_) n += static_cast<size_t>(std::abs(l.exp));
    return n;
}

Word multiply(const Word& u, const Word& v) {
    int g = join_genus(u, v);
    std::vector<Letter> out = u.letters();
    out.insert(out.end(), v.letters().begin(), v.letters().end());
    return Word(g, std::move(out));
}

Word invert(const Word& u) {
    std::vector<Letter> out(u.letters().rbegin(), u.letters().rend());
    for (Letter& l : out) l.exp = -l.exp;
    return Word(u.genus(), std::move(out));
}

Word power(const Word& u, long n) {
    if (n < 0) return power(invert(u), -n);
    Word out(u.genus());
    for (long k = 0; k < n; ++k) out = multiply(out, u);
    return out;
}

Word commutator(const Word& u, const Word& v) {
    return multiply(multiply(invert(v), invert(u)), multiply(v, u));
}

Word relator(const SurfacePresentation& pres) {
    Word r(pres.genus);
    for (int i = 1; i <= pres.genus; ++i)
        r = multiply(r, commutator(Word::a(pres, i), Word::b(pres, i)));
    return r;
}

std::string word_to_string(const Word& w) {
    std::string out;
    for (const Letter& l : w.letters()) {
        int i = l.gen / 2;
        bool is_b = (l.gen % 2) == 1;
        char c = static_cast<char>((is_b ? 'A' : 'a') + i);
        long n = std::abs(l.exp);
        for (long k = 0; k < n; ++k) {
            if (!out.empty()) out += ' ';
            out += c;
            if (l.exp < 0) out += '\'';
        }
    }
    return out;
}

Word word_from_string(const SurfacePresentation& pres, const std::string& s) {
    std::vector<Letter> letters;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        char c = tok[0];
        bool inv = tok.size() > 1 && tok[1] == '\'';
        if ((inv && tok.size() != 2) || (!inv && tok.size() != 1))
            throw InvalidMap("bad word token '" + tok + "'");
        int gen;
        if (c >= 'a' && c <= 'z')
            gen = 2 * (c - 'a');
        else if (c >= 'A' && c <= 'Z')
            gen = 2 * (c - 'A') + 1;
        else
            throw InvalidMap("bad word token '" + tok + "'");
        check_gen(pres.genus, gen);
        letters.push_back({gen, inv ? -1L : 1L});
    }
    return Word(pres.genus, std::move(letters));
}

long algebraic_intersection(const Word& u, const Word& v) {
    int g = join_genus(u, v);
    std::vector<long> hu(2 * g, 0), hv(2 * g, 0);
    for (const Letter& l : u.letters()) hu[static_cast<size_t>(l.gen)] += l.exp;
    for (const Letter& l : v.letters()) hv[static_cast<size_t>(l.gen)] += l.exp;
    long s = 0;
    for (int i = 0; i < g; ++i)
        s += hu[static_cast<size_t>(2 * i)] * hv[static_cast<size_t>(2 * i + 1)] -
             hu[static_cast<size_t>(2 * i + 1)] * hv[static_cast<size_t>(2 * i)];
    return s;
}

DirectedChain::DirectedChain(std::vector<Word> w, std::vector<int> s)
    : words(std::move(w)), signs(std::move(s)) {
    if (words.empty()) throw InvalidMap("empty chain");
    if (signs.size() + 1 != words.size())
        throw InvalidMap("chain needs one sign per consecutive pair");
    for (size_t i = 0; i + 1 < words.size(); ++i) {
        if (signs[i] != 1 && signs[i] != -1)
            throw InvalidMap("chain signs must be +-1");
        for (size_t j = i + 1; j < words.size(); ++j) {
            long got = algebraic_intersection(words[i], words[j]);
            long want = (j == i + 1) ? signs[i] : 0;
            if (got != want)
                throw InvalidMap("chain intersection i(" + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + ") = " +
                                 std::to_string(got) + ", expected " +
                                 std::to_string(want));
        }
    }
}

DirectedChain dehn_twist(const DirectedChain& chain, int index, long N) {
    size_t k = chain.words.size();
    if (index < 1 || static_cast<size_t>(index) > k)
        throw IndexOutOfRange("twist index " + std::to_string(index) +
                              " for chain of length " + std::to_string(k));
    size_t i = static_cast<size_t>(index) - 1;
    std::vector<Word> out = chain.words;
    if (i >= 1) out[i - 1] = multiply(power(chain.words[i], -N), chain.words[i - 1]);
    if (i + 1 < k) out[i + 1] = multiply(chain.words[i + 1], power(chain.words[i], N));
    return DirectedChain(std::move(out), chain.signs);
}

void validate(const PantsDecomposition& dec) {
    SurfacePresentation pres(dec.genus);
    const Word rel = relator(pres);
    for (size_t p = 0; p < dec.pants.size(); ++p) {
        const auto& b = dec.pants[p].boundary;
        Word prod = multiply(b[2], multiply(b[1], b[0]));
        if (!prod.empty())
            throw InvalidMap("pants " + std::to_string(p) +
                             " boundary product is not the identity");
    }
    auto bdry = [&](int p, int s) -> const Word& {
        if (p < 0 || static_cast<size_t>(p) >= dec.pants.size() || s < 0 || s > 2)
            throw IndexOutOfRange("gluing slot");
        return dec.pants[static_cast<size_t>(p)].boundary[static_cast<size_t>(s)];
    };
    for (const Gluing& gl : dec.gluings) {
        const Word& u = bdry(gl.p1, gl.s1);
        const Word& v = bdry(gl.p2, gl.s2);
        const Word& w = gl.conjugator;
        Word conj = multiply(invert(w), multiply(u, w));
        bool ok = false;
        switch (gl.kind) {
            case GluingKind::Conjugate:
                ok = (v == conj);
                break;
            case GluingKind::Inverse:
                ok = (invert(v) == conj);
                break;
            case GluingKind::InverseModRelator: {
                const Word ri = invert(rel);
                for (const Word& prod :
                     {multiply(u, v), multiply(v, u), multiply(invert(u), v),
                      multiply(v, invert(u)), multiply(u, invert(v)),
                      multiply(invert(v), u)})
                    if (prod == rel || prod == ri) ok = true;
                break;
            }
        }
        if (!ok)
            throw InvalidMap("gluing (" + std::to_string(gl.p1) + "," +
                             std::to_string(gl.s1) + ")-(" + std::to_string(gl.p2) +
                             "," + std::to_string(gl.s2) + ") relation fails");
    }
}

PantsDecomposition standard_pants_decomposition(const SurfacePresentation& pres) {
    const int g = pres.genus;
    PantsDecomposition dec;
    dec.genus = g;
    std::vector<Word> c(static_cast<size_t>(g) + 1), d(static_cast<size_t>(g) + 1);
    d[0] = Word(g);
    for (int i = 1; i <= g; ++i) {
        c[static_cast<size_t>(i)] = commutator(Word::a(pres, i), Word::b(pres, i));
        d[static_cast<size_t>(i)] =
            multiply(d[static_cast<size_t>(i - 1)], c[static_cast<size_t>(i)]);
    }
    // One pants per handle: cut along a_i.
    for (int i = 1; i <= g; ++i) {
        Word ai = Word::a(pres, i), bi = Word::b(pres, i);
        dec.pants.push_back(
            {{multiply(invert(bi), multiply(ai, bi)), invert(ai), c[static_cast<size_t>(i)]}});
        dec.gluings.push_back({i - 1, 0, i - 1, 1, GluingKind::Inverse, invert(bi)});
    }
    if (g == 2) {
        dec.gluings.push_back({0, 2, 1, 2, GluingKind::InverseModRelator, Word(g)});
        validate(dec);
        return dec;
    }
    // Middle pants between d_j and d_{j+1}, j = 1..g-2.
    for (int j = 1; j <= g - 2; ++j) {
        const Word& dj = d[static_cast<size_t>(j)];
        Word mid = multiply(dj, multiply(c[static_cast<size_t>(j + 1)], invert(dj)));
        dec.pants.push_back({{dj, mid, invert(d[static_cast<size_t>(j + 1)])}});
    }
    const int m0 = g;  // index of first middle pants
    dec.gluings.push_back({0, 2, m0, 0, GluingKind::Conjugate, Word(g)});
    for (int j = 1; j <= g - 2; ++j)
        dec.gluings.push_back(
            {j, 2, m0 + j - 1, 1, GluingKind::Conjugate, invert(d[static_cast<size_t>(j)])});
    for (int j = 1; j <= g - 3; ++j)
        dec.gluings.push_back({m0 + j - 1, 2, m0 + j, 0, GluingKind::Inverse, Word(g)});
    dec.gluings.push_back({m0 + g - 3, 2, g - 1, 2, GluingKind::InverseModRelator, Word(g)});
    validate(dec);
    return dec;
}

DirectedChain builtin_chain_genus2() {
    SurfacePresentation pres(2);
    Word a1 = Word::a(pres, 1), b1 = Word::b(pres, 1);
    Word a2 = Word::a(pres, 2), b2 = Word::b(pres, 2);
    // homology classes (A1, -B1, -A1-A2, B2, A2): all consecutive pairings -1;
    // the conjugate positions realize the chain geometrically on the closed
    // hyperbolic genus-2 surface (fixed points in chain cyclic order)
    return DirectedChain({a1, invert(b1), invert(multiply(a1, a2)),
                          multiply(multiply(invert(a2), b2), a2), a2},
                         {-1, -1, -1, -1});
}

}  // namespace circlerig
