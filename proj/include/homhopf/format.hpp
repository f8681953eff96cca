#pragma once

// Text definition files. A file starts with "homhopf 1", then the header
// lines name, field_char, dim and basis, followed by sparse blocks:
//
//   mul        i j k c     unit     i c       alpha     i j c
//   comul      i j k c     counit   i c       antipode  i j c
//   rmatrix    i j c       cocycle left|right  i j c
//   partner ... endpartner   (a nested document, one level deep)
//   action     h m m' c    partner acts on this object, shape (nP, n, n)
//   coaction   m m' h c    this object coacts on the partner, shape (nP, nP, n)
//   pairing    i j c       gram matrix against the partner, shape (n, nP)
//
// Each block ends with "end". Scalars are integers or p/q; missing entries are
// zero. Lines starting with '#' are comments. mul, unit and alpha are
// required; comul and counit come together; antipode needs both.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homhopf/catalog.hpp"
#include "homhopf/structures.hpp"

namespace homhopf {

struct AlgebraFile {
    std::string name;
    std::vector<std::string> basis;
    Tensor3 mul;
    Vector unit;
    Matrix alpha;
    std::optional<Tensor3> comul;
    std::optional<Vector> counit;
    std::optional<Matrix> antipode;
    std::optional<Matrix> rmatrix;
    std::optional<Side> cocycle_side;
    std::optional<Matrix> cocycle;
    std::shared_ptr<const AlgebraFile> partner;
    std::optional<Tensor3> action;
    std::optional<Tensor3> coaction;
    std::optional<Matrix> pairing;

    std::size_t dim() const { return basis.size(); }
    bool has_coalgebra() const { return comul.has_value(); }
    bool has_antipode() const { return antipode.has_value(); }

    // These validate structure (shapes, invertible alpha) and throw
    // InvalidParameter when the file lacks the blocks the level needs.
    HomAlgebra algebra() const;
    HomBialgebra bialgebra() const;
    HomHopfAlgebra hopf() const;

    bool operator==(const AlgebraFile& o) const;
};

std::vector<std::string> default_basis(std::size_t n, const std::string& prefix = "e");

AlgebraFile file_from_algebra(const std::string& name, const HomAlgebra& A, std::vector<std::string> basis = {});
AlgebraFile file_from_bialgebra(const std::string& name, const HomBialgebra& B, std::vector<std::string> basis = {});
AlgebraFile file_from_hopf(const std::string& name, const HomHopfAlgebra& H, std::vector<std::string> basis = {});
AlgebraFile file_from_entry(const CatalogEntry& e);
// Needs a Hopf object; partner/action/coaction become the bundled datum.
CatalogEntry entry_from_file(const AlgebraFile& f);

AlgebraFile parse_algebra_file(std::string_view text);
std::string serialize_algebra_file(const AlgebraFile& f);

// Reads a file when the path exists, otherwise resolves a catalog name.
// Throws IoError when neither works.
AlgebraFile load_algebra(const std::string& path_or_name);
void write_text_file(const std::string& path, const std::string& text);

std::string sha256_hex(std::string_view bytes);

}  // namespace homhopf
