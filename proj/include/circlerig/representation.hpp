#ifndef CIRCLERIG_REPRESENTATION_HPP
#define CIRCLERIG_REPRESENTATION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "circlerig/homeo.hpp"
#include "circlerig/rotnum.hpp"
#include "circlerig/surface.hpp"

namespace circlerig {

enum class RelatorStatus { VerifiedExact, VerifiedWithinTol, UnverifiedFree };

// An action of the genus-g surface group (or of a rank-2 free group, for
// pants and one-holed-torus subgroups) on the circle.
class Representation {
public:
    Representation(int genus, std::vector<CircleHomeo> assignment, RelatorStatus status,
                   double tol, std::optional<long> euler);

    int genus() const { return genus_; }
    const CircleHomeo& image(int gen_id) const;
    const std::vector<CircleHomeo>& assignment() const { return assignment_; }
    RelatorStatus relator_status() const { return status_; }
    double tol() const { return tol_; }
    std::optional<long> cached_euler() const { return euler_; }

private:
    int genus_;
    std::vector<CircleHomeo> assignment_;  // a_1, b_1, ..., a_g, b_g
    RelatorStatus status_;
    double tol_;
    std::optional<long> euler_;
};

// Evaluates and checks the relator; caches the Euler number.
Representation new_representation(const SurfacePresentation& pres,
                                  const std::vector<CircleHomeo>& assignment,
                                  double tol = 1e-9);

// Rank-2 free-group representation (pants / one-holed torus): no relator.
Representation free_representation(const std::vector<CircleHomeo>& assignment,
                                   double tol = 1e-9);

CircleHomeo evaluate_word(const Representation& rep, const Word& w);

// lift_choice[i] shifts the canonical lift of generator i by an integer;
// commutator lifts are independent of the choice.
LiftedMap evaluate_word_lift(const Representation& rep, const Word& w,
                             const std::vector<long>& lift_choice = {});

long euler_number(const Representation& rep);

// rot~(a) + rot~(d) - rot~(d a) on the boundary triple (a, d, (da)^-1).
RotBound pants_euler(const Representation& rep, const Pants& pants, double tol = 1e-9);

// Interval sum of pants_euler over the decomposition.
RotBound subsurface_euler(const Representation& rep, const PantsDecomposition& dec,
                          double tol = 1e-9);

// Closed hyperbolic genus-g surface: Euler number -(2g-2), all generators
// hyperbolic Mobius maps, relator verified within 1e-9.
Representation fuchsian_closed(int g);

// Free on (a, b): a -> diag(lambda, 1/lambda), b its quarter-rotation
// conjugate; the commutator is hyperbolic with lifted translation number -1.
Representation fuchsian_once_punctured_torus(double lambda);

struct FixedPointTable {
    std::vector<std::pair<Word, DynClass>> entries;
};

FixedPointTable fixed_point_table(const Representation& rep,
                                  const std::vector<Word>& words, double tol = 1e-9);

// First pair whose lifted commutator has translation number +-1 (exact
// integer certificate required).
std::optional<std::pair<Word, Word>> detect_fuchsian_torus(
    const Representation& rep, const std::vector<std::pair<Word, Word>>& pairs,
    double tol = 1e-9);

// True iff Fix(rho(a)) separates Fix(rho(b)): both hyperbolic, and b's fixed
// points lie in different components of the complement of Fix(rho(a)).
bool verify_separation(const Representation& rep, const Word& a, const Word& b,
                       double tol = 1e-9);

// Checks the total cyclic order of the 6 (chain length 3) or 10 (length 5)
// fixed points, up to global orientation reversal.
bool verify_chain_order(const Representation& rep, const DirectedChain& chain,
                        double tol = 1e-9);

// Conjugation by the orientation-reversing reflection x -> -x (the result is
// again orientation-preserving). Negates rotation numbers and Euler numbers.
CircleHomeo mirror(const CircleHomeo& f);
Representation mirror_representation(const Representation& rep);

// Four-holed sphere in the genus-2 surface: boundary words (a, b, c, d) with
// d c b a = relator, plus its two pants decompositions along the two
// diagonal curves (related by an elementary move).
struct FourHoledSphere {
    std::array<Word, 4> boundary;  // a, b, c, d
    PantsDecomposition along_ba;
    PantsDecomposition along_cb;
};

FourHoledSphere four_holed_sphere_genus2();

}  // namespace circlerig

#endif
