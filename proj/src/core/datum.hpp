#ifndef QCV_DATUM_HPP
#define QCV_DATUM_HPP

#include "scalars.hpp"
#include <string>
#include <vector>

namespace qcv {

using IMat = std::vector<std::vector<long>>;
using XWeight = std::vector<long>; // coordinates in the chosen basis of X
using Weight = std::vector<int>;   // element of N[I]

struct ValidationIssue {
    std::string axiom;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string to_json() const;
};

enum class LatticeKind { Weight, Root, Custom };

// A super Cartan datum (I, .) with parity, together with a root datum:
// X = Z^m with pairing rows <i, -> and embedded simple roots i'.
class SuperDatum {
  public:
    static SuperDatum make(std::vector<std::string> names, IMat dot, std::vector<int> parity,
                           LatticeKind kind, IMat custom_pairing = {});
    // the osp(1|2n) datum: chain, node n odd with n.n = 2, others 4, links -2
    static SuperDatum osp(long n, LatticeKind kind);
    static SuperDatum from_json(const std::string& json_text);

    size_t rank() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    long dot(size_t i, size_t j) const { return dot_[i][j]; }
    long d(size_t i) const { return dot_[i][i] / 2; }
    int parity(size_t i) const { return parity_[i]; }
    bool is_super() const;
    LatticeKind lattice_kind() const { return kind_; }

    // <i, j'> = 2 (i.j)/(i.i)
    long cartan(size_t i, size_t j) const;

    size_t xrank() const { return xrank_; }
    long pairing(size_t i, const XWeight& lam) const;
    XWeight simple_root(size_t j) const; // coordinates of j' in X
    XWeight x_zero() const { return XWeight(xrank_, 0); }
    bool dominant(const XWeight& lam) const;

    // nu . alpha_i with nu in N[I] (the dot form extended to Z[I])
    long weight_dot_simple(const Weight& nu, size_t i) const;

    ValidationReport validate() const;
    std::string to_json() const;

    // positive roots of the associated (finite type) root system, as Z[I]-vectors;
    // computed by reflection closure, throws for non finite type
    const std::vector<Weight>& positive_roots() const;
    // number of ways to write nu as an N-combination of positive roots
    long kostant_count(const Weight& nu) const;

  private:
    std::vector<std::string> names_;
    IMat dot_;
    std::vector<int> parity_;
    LatticeKind kind_ = LatticeKind::Weight;
    size_t xrank_ = 0;
    IMat pairing_;   // rank x xrank, rows <i, e_k>
    IMat embedding_; // xrank x rank, column j = coords of j'
    mutable std::vector<Weight> pos_roots_; // lazy
};

// ell_i table and the derived datum (I, diamond).
struct DiamondDatum {
    long ell = 0;
    std::vector<long> ell_i;
    IMat diamond;                  // i<>j = (i.j) l_i l_j
    std::vector<int> parity_diamond;
    bool derived_super = false;    // ell odd and base super

    long cartan_diamond(size_t i, size_t j) const; // 2(i<>j)/(i<>i), integral
    long d_diamond(size_t i) const { return diamond[i][i] / 2; }

    // X^{diamond} membership: <i, lam> in l_i Z for all i
    bool in_x_diamond(const SuperDatum& d, const XWeight& lam) const;
    // basis (columns) of the sublattice X^{diamond} of X
    IMat x_diamond_basis(const SuperDatum& d) const;
    // <i^{diamond}, lam> = <i, lam>/l_i for lam in X^{diamond}
    long pairing_diamond(const SuperDatum& d, size_t i, const XWeight& lam) const;
};

DiamondDatum derive_diamond(const SuperDatum& d, long ell);

// assumptions 35.1.2(a) (l_i >= -<i,j'> + 1 whenever l_j >= 2) and (b) (no odd cycles)
ValidationReport check_frobenius_assumptions(const SuperDatum& d, long ell);

// Smith-style helpers over Z (small matrices)
IMat integer_kernel(const IMat& a);                 // columns span ker(a) in Z^cols
long lattice_image_size(const IMat& gens, long modulus); // |image of Z^k -> (Z/m)^n|

} // namespace qcv

#endif
