#include "slgen/hilbert.hpp"

#include <sstream>

namespace slgen {

long Site::dim() const {
    switch (kind) {
        case SiteKind::Spin: return 2;
        case SiteKind::FermionPair: return 4;
        case SiteKind::BosonMode: return static_cast<long>(boson_cutoff) + 1;
    }
    return 0;
}

HilbertSpec HilbertSpec::spin_lattice(int N, int n, int cutoff) {
    HilbertSpec spec;
    for (int r = 0; r < 2 * N + 1; ++r) spec.sites.push_back(Site::spin());
    for (int l = 0; l < n; ++l) spec.sites.push_back(Site::boson_mode(cutoff));
    return spec;
}

HilbertSpec HilbertSpec::fermion_lattice(int N, int n, int cutoff) {
    HilbertSpec spec;
    for (int r = 0; r < 2 * N + 1; ++r) spec.sites.push_back(Site::fermion_pair());
    for (int l = 0; l < n; ++l) spec.sites.push_back(Site::boson_mode(cutoff));
    return spec;
}

Space::Space(HilbertSpec spec) : spec_(std::move(spec)) {
    if (spec_.sites.empty())
        throw ValidationError("HilbertSpec must contain at least one site");
    factor_dims_.reserve(spec_.sites.size());
    for (const Site& s : spec_.sites) {
        if (s.kind == SiteKind::BosonMode && s.boson_cutoff < 1)
            throw ValidationError("BosonMode cutoff must be >= 1");
        const long d = s.dim();
        factor_dims_.push_back(d);
        if (dim_ > spec_.dimension_cap / d + 1)
            throw DimensionCapError("total dimension exceeds cap of " +
                                    std::to_string(spec_.dimension_cap));
        dim_ *= d;
        if (dim_ > spec_.dimension_cap)
            throw DimensionCapError("total dimension " + std::to_string(dim_) +
                                    " exceeds cap of " + std::to_string(spec_.dimension_cap));
    }
    // row-major over sites: site 0 is the leftmost (most significant) factor
    strides_.assign(spec_.sites.size(), 1);
    for (int i = site_count() - 2; i >= 0; --i)
        strides_[static_cast<size_t>(i)] =
            strides_[static_cast<size_t>(i + 1)] * factor_dims_[static_cast<size_t>(i + 1)];
}

std::string Space::describe() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < site_count(); ++i) {
        if (i) os << ", ";
        switch (site(i).kind) {
            case SiteKind::Spin: os << "spin"; break;
            case SiteKind::FermionPair: os << "fermion_pair"; break;
            case SiteKind::BosonMode: os << "boson(" << site(i).boson_cutoff << ")"; break;
        }
    }
    os << "] dim=" << dim_;
    return os.str();
}

SpacePtr build_space(HilbertSpec spec) {
    return std::make_shared<const Space>(std::move(spec));
}

} // namespace slgen
