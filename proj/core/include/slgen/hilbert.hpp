// hilbert.hpp — declarative tensor-product spaces over spins, paired fermi
// levels and truncated boson modes
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "slgen/errors.hpp"

namespace slgen {

enum class SiteKind { Spin, FermionPair, BosonMode };

struct Site {
    SiteKind kind{SiteKind::Spin};
    int boson_cutoff{0}; // max occupation M, BosonMode only

    static Site spin() { return {SiteKind::Spin, 0}; }
    static Site fermion_pair() { return {SiteKind::FermionPair, 0}; }
    static Site boson_mode(int cutoff) { return {SiteKind::BosonMode, cutoff}; }

    long dim() const;
    bool operator==(const Site&) const = default;
};

// Ordered list of subsystem sites. Site indices are stable and 0-based;
// a lattice stretch r = -N..N maps to indices r + N.
struct HilbertSpec {
    std::vector<Site> sites;
    long dimension_cap{4096};

    // 2N+1 spins followed by n boson modes with occupation cutoff M
    static HilbertSpec spin_lattice(int N, int n, int cutoff);
    // 2N+1 fermion pairs followed by n boson modes
    static HilbertSpec fermion_lattice(int N, int n, int cutoff);

    bool operator==(const HilbertSpec& o) const { return sites == o.sites; }
};

// Built handle with cached dimension and per-site strides.
class Space {
public:
    explicit Space(HilbertSpec spec);

    long dim() const { return dim_; }
    int site_count() const { return static_cast<int>(spec_.sites.size()); }
    const HilbertSpec& spec() const { return spec_; }
    const Site& site(int i) const { return spec_.sites.at(static_cast<size_t>(i)); }
    long factor_dim(int i) const { return factor_dims_.at(static_cast<size_t>(i)); }
    // number of global basis states spanned by one local step at site i
    long stride(int i) const { return strides_.at(static_cast<size_t>(i)); }

    bool same_as(const Space& other) const { return spec_ == other.spec_; }
    std::string describe() const;

private:
    HilbertSpec spec_;
    long dim_{1};
    std::vector<long> factor_dims_;
    std::vector<long> strides_;
};

using SpacePtr = std::shared_ptr<const Space>;

SpacePtr build_space(HilbertSpec spec);

} // namespace slgen
