#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quintics {

struct LatticeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Integer combination of the generators of one intersection form.
struct DivisorClass {
    std::string name;
    std::string form;  ///< name of the form whose basis the coefficients refer to
    std::vector<long long> coeffs;

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator-() const;
    DivisorClass scaled(long long k) const;
    bool operator==(const DivisorClass& o) const { return form == o.form && coeffs == o.coeffs; }
    bool is_zero() const;
};
DivisorClass operator*(long long k, const DivisorClass& d);

/// Symmetric multilinear integer form of arity 2 (a surface pairing) or 3 (triple
/// intersection numbers on a threefold). Entries that were never stated stay unknown and any
/// product that needs one throws.
///
/// Text format, one statement per line, '#' starts a comment:
///   triple NAME | surface NAME
///   basis G1 G2 ...
///   G1 G2 [G3] = n
///   class NAME = 2G1 - G2 + ...
class IntersectionForm {
public:
    static IntersectionForm parse(std::string_view text);
    static IntersectionForm load(const std::filesystem::path& file);

    const std::string& name() const { return name_; }
    int arity() const { return arity_; }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::map<std::string, DivisorClass>& classes() const { return classes_; }

    std::optional<long long> entry(const std::vector<std::size_t>& idx) const;
    /// Checks that every stated entry agrees with all its index permutations.
    bool is_symmetric() const;
    std::size_t known_entries() const;

    DivisorClass generator(const std::string& g) const;
    /// A class from the file or a generator, by name.
    DivisorClass named(const std::string& n) const;
    /// Parses "2H2 - X" style combinations; names may refer to generators or stored classes.
    DivisorClass combination(std::string_view expr, std::string name = {}) const;
    DivisorClass zero() const;

    /// Multilinear expansion; throws LatticeError on basis mismatch, wrong arity or an
    /// unknown entry with nonzero weight.
    long long product(const std::vector<DivisorClass>& ds) const;

    bool operator==(const IntersectionForm& o) const {
        return name_ == o.name_ && arity_ == o.arity_ && basis_ == o.basis_ && table_ == o.table_ && classes_ == o.classes_;
    }

protected:
    std::size_t flat(const std::vector<std::size_t>& idx) const;
    std::size_t index_of(const std::string& g) const;

    std::string name_;
    int arity_ = 0;
    std::vector<std::string> basis_;
    std::vector<std::optional<long long>> table_;
    std::map<std::string, DivisorClass> classes_;
};

class TripleForm : public IntersectionForm {
public:
    explicit TripleForm(IntersectionForm f);
    long long triple(const DivisorClass& a, const DivisorClass& b, const DivisorClass& c) const { return product({a, b, c}); }
    long long cube(const DivisorClass& a) const { return product({a, a, a}); }
};

class SurfaceForm : public IntersectionForm {
public:
    explicit SurfaceForm(IntersectionForm f);
    long long pair(const DivisorClass& a, const DivisorClass& b) const { return product({a, b}); }
};

/// The four tables used by the lattice checks.
struct LatticeTables {
    TripleForm secant_bundle;      ///< basis H1, C, F
    TripleForm resolved_secant;    ///< basis H2, X, Sigma1
    SurfaceForm symmetric_square;  ///< basis C0, F on S^2 E
    SurfaceForm abelian_blowup;    ///< basis Hp, E
    std::string source;            ///< "embedded" or the directory read
};

/// File names expected inside a table directory.
const std::vector<std::string>& lattice_table_files();
/// Text of the tables compiled into the library.
std::string embedded_lattice_table(const std::string& file);
/// Reads the tables from `dir`, or the embedded copies when `dir` is empty.
LatticeTables load_lattice_tables(const std::filesystem::path& dir = {});

}  // namespace quintics
