#include "repgrowth/cohom/cohomology.hpp"
#include "repgrowth/crowns/crowns.hpp"

namespace repgrowth::cohom {

AgReport ag_check(const GModule& M) {
  if (!gmod::is_irreducible(M)) throw std::invalid_argument("ag_check needs an irreducible module");
  AgReport r;
  r.h1_G = h1_dim(M);
  auto img = crowns::faithful_image(M);
  r.h1_image = h1_dim(img.module);
  r.kernel_order = img.kernel.size();
  r.endo_degree = gmod::endo_degree(M);
  r.delta = crowns::delta_and_r(M.group_ptr(), M).delta;
  return r;
}

}  // namespace repgrowth::cohom
