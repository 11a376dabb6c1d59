#ifndef CIRCLERIG_SURFACE_HPP
#define CIRCLERIG_SURFACE_HPP

#include <array>
#include <string>
#include <vector>

#include "circlerig/errors.hpp"

namespace circlerig {

// Standard presentation of the genus-g surface group on a_1,b_1,...,a_g,b_g
// with relator [a_1,b_1]...[a_g,b_g]; words are read right to left.
struct SurfacePresentation {
    int genus;
    explicit SurfacePresentation(int g) : genus(g) {
        if (g < 2) throw InvalidMap("surface presentation needs genus >= 2");
    }
};

// Generator ids: a_i <-> 2(i-1), b_i <-> 2(i-1)+1.
struct Letter {
    int gen;
    long exp;
    bool operator==(const Letter&) const = default;
};

class Word {
public:
    Word() : genus_(0) {}
    explicit Word(int genus) : genus_(genus) {}
    Word(int genus, std::vector<Letter> letters);

    static Word generator(const SurfacePresentation& pres, int gen_id, long exp = 1);
    static Word a(const SurfacePresentation& pres, int i, long exp = 1);  // a_i, 1-based
    static Word b(const SurfacePresentation& pres, int i, long exp = 1);  // b_i, 1-based

    int genus() const { return genus_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    size_t length() const;  // total letter count, with multiplicity
    bool operator==(const Word&) const = default;

private:
    int genus_;  // 0 = unbound (empty word compatible with anything)
    std::vector<Letter> letters_;  // freely reduced; leftmost letter acts last
};

// Right-to-left composition order: (u*v)(x) = u(v(x)).
Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, long n);
// [u,v] = v^-1 u^-1 v u.
Word commutator(const Word& u, const Word& v);
Word relator(const SurfacePresentation& pres);

// Serialization: lowercase = a-generators, uppercase = b-generators, prime =
// inverse; letters separated by spaces, e.g. "B a B' A'". Empty word = "".
std::string word_to_string(const Word& w);
Word word_from_string(const SurfacePresentation& pres, const std::string& s);

// Symplectic pairing of the homology classes: <[a_i],[b_i]> = 1.
long algebraic_intersection(const Word& u, const Word& v);

// A directed k-chain: consecutive algebraic intersections are the declared
// +-1, non-consecutive pairs have intersection 0 (validated on construction).
struct DirectedChain {
    std::vector<Word> words;
    std::vector<int> signs;  // i(gamma_j, gamma_j+1), size k-1

    DirectedChain(std::vector<Word> w, std::vector<int> s);
};

// The twist along gamma_i applied N times: gamma_{i-1} -> gamma_i^-N
// gamma_{i-1}, gamma_{i+1} -> gamma_{i+1} gamma_i^N, everything else fixed.
// index is 1-based.
DirectedChain dehn_twist(const DirectedChain& chain, int index, long N);

struct Pants {
    std::array<Word, 3> boundary;  // (x, y, z) with z*y*x = 1 freely
};

enum class GluingKind { Inverse, Conjugate, InverseModRelator };

struct Gluing {
    int p1, s1, p2, s2;
    GluingKind kind;
    Word conjugator;  // w: relates boundary(p1,s1) to boundary(p2,s2)
};

struct PantsDecomposition {
    int genus;
    std::vector<Pants> pants;
    std::vector<Gluing> gluings;
};

// Throws InvalidMap when a pants triple does not multiply to the identity or
// a gluing relation fails its declared check.
void validate(const PantsDecomposition& dec);

// Cut along a_i, c_i = [a_i,b_i] and d_j = c_1...c_j: g one-holed-torus
// pants plus g-2 middle pants, 2g-2 in total.
PantsDecomposition standard_pants_decomposition(const SurfacePresentation& pres);

// Fixed validated 5-chain (a, b, c, d, e) in genus 2, first element a_1.
DirectedChain builtin_chain_genus2();

}  // namespace circlerig

#endif
