/*
   Copyright 2026 the pisotbeta authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <pisot/catalog.hpp>
#include <pisot/family.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace pisot {

constexpr int kDefaultRenderWidth = 300;

/* Row-major 8-bit RGB raster. */
struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<unsigned char> rgb;  // 3 * width * height bytes

  void set(int row, int col, unsigned char r, unsigned char g, unsigned char b) {
    const std::size_t at = 3 * (static_cast<std::size_t>(row) * width + col);
    rgb[at] = r;
    rgb[at + 1] = g;
    rgb[at + 2] = b;
  }
};

/* Digit colors: the images show the first `width` digits of each expansion,
   one instance per row, with green = 0 and black = 1.  Rows whose instance
   has no root in (1,2) are drawn white. */
inline void render_row(RasterImage& img, int row, const FamilyId& id) {
  CatalogEntry ent = catalog_expansion(id);
  if (ent.status != InstanceStatus::OK) {
    for (int c = 0; c < img.width; ++c) img.set(row, c, 255, 255, 255);
    return;
  }
  for (int c = 0; c < img.width; ++c) {
    // digit_at pads finite words with 0s, which is exactly the drawing rule
    if (digit_at(*ent.word, static_cast<std::size_t>(c) + 1) == 0)
      img.set(row, c, 0, 255, 0);
    else
      img.set(row, c, 0, 0, 0);
  }
}

/* The instance drawn in row `n` of a family image.  Perturbation families
   vary n with every other parameter fixed by the family text; for the limit
   families PhiR/PsiR the row index plays the role of r. */
inline FamilyId render_instance(const ParsedFamily& fam, int n) {
  FamilyId id;
  id.kind = fam.kind;
  id.sign = fam.sign;
  if (fam.kind == FamilyKind::Chi)
    throw std::invalid_argument("render: Chi is a single base, not an n family");
  if (!family_has_n(fam.kind)) {  // PhiR / PsiR
    if (fam.sign != 0 || !fam.args.empty())
      throw std::invalid_argument("render: " + std::string(family_kind_name(fam.kind)) +
                                  " takes no sign and no fixed parameters");
    id.r = n;
  } else {
    if (fam.sign == 0)
      throw std::invalid_argument("render: perturbation family needs a + or - sign");
    const std::size_t want = family_has_r(fam.kind) ? 1u : 0u;
    if (fam.args.size() != want)
      throw std::invalid_argument(
          "render: expected " + std::to_string(want) + " fixed parameter(s) for " +
          family_kind_name(fam.kind) + " with n left free");
    if (family_has_r(fam.kind)) id.r = fam.args[0];
    id.n = n;
  }
  validate_family(id);
  return id;
}

/* One row per n in [n_lo, n_hi], ascending top to bottom. */
inline RasterImage render_family(const ParsedFamily& fam, int n_lo, int n_hi, int width) {
  if (width < 1) throw std::invalid_argument("render: width must be at least 1");
  if (n_lo < 1 || n_hi > kMaxFamilyParam || n_lo > n_hi)
    throw std::invalid_argument("render: bad n range");
  RasterImage img;
  img.width = width;
  img.height = n_hi - n_lo + 1;
  img.rgb.assign(3 * static_cast<std::size_t>(width) * img.height, 0);
  for (int n = n_lo; n <= n_hi; ++n) render_row(img, n - n_lo, render_instance(fam, n));
  return img;
}

/* Binary PPM, maxval 255, no comment lines: byte-identical across runs. */
inline void write_ppm(std::ostream& os, const RasterImage& img) {
  os << "P6\n" << img.width << " " << img.height << "\n255\n";
  os.write(reinterpret_cast<const char*>(img.rgb.data()),
           static_cast<std::streamsize>(img.rgb.size()));
}

}  // namespace pisot
