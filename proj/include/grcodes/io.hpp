#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "grcodes/codes.hpp"
#include "grcodes/matrix.hpp"

namespace grcodes {

/// Matrix text: header `rows cols field`, then one row per line.
void write_matrix(std::ostream& os, const FpMatrix& m);
FpMatrix read_matrix(std::istream& is);

/// A code bundle as stored on disk.
struct CodeBundle {
    std::size_t n = 0;
    std::size_t k = 0;
    Ring field = Ring::gf2();
    std::string group;    // group spec or "-"
    std::string element;  // element text without spaces or "-"
    std::string basis;    // comma-separated indices or "-"
    FpMatrix generator;
    FpMatrix check;
};

/// Header `n k field group element basis`, the k generator rows, a blank
/// line, then the n - k check rows.
void write_bundle(std::ostream& os, const LinearCode& code);
CodeBundle read_bundle(std::istream& is);

/// MacKay alist for a binary matrix.
void write_alist(std::ostream& os, const FpMatrix& h);
FpMatrix read_alist(std::istream& is);

/// JSON summary (schema 1) with parameters, provenance and extra flags.
std::string json_summary(const LinearCode& code, const std::map<std::string, bool>& flags = {});

}  // namespace grcodes
