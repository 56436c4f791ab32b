#pragma once

#include <functional>

#include "purefull/deform.hpp"
#include "purefull/hermitian.hpp"

namespace purefull {

// Why the invariant computation equals the manifold-level one.
enum class Validity { Nilpotent, CompletelySolvable, CompactFactor };

std::string to_string(Validity v);

struct ZooEntry;

// Memoizes the heavy shared computations while one entry's expectation list
// runs.
struct ZooRunCache {
    std::map<std::pair<std::string, int>, StageReport> stages;
    std::map<std::pair<std::string, std::string>, ScanRow> scans;

    const StageReport& stage(const ZooEntry& z, const std::string& structure, int k);
    const ScanRow& scan(const ZooEntry& z, const std::string& curve, const GaussianRational& t);
};

// One checkable fact with its source anchor. `compute` returns the engine's
// value as a string; the record passes when it equals `expected` verbatim.
struct Expectation {
    std::string operation;
    std::string args;
    std::string expected;
    std::string anchor;
    std::function<std::string(const ZooEntry&, ZooRunCache&)> compute;
};

struct ExpectationResult {
    const Expectation* record = nullptr;
    bool pass = false;
    std::string actual;
};

struct ZooEntry {
    std::string name;
    std::string description;
    LieAlgebraPresentation pres;
    Validity validity = Validity::Nilpotent;
    std::string default_structure; // key into structures
    std::map<std::string, AlmostComplexStructure> structures;
    std::map<std::string, Form> forms;
    std::map<std::string, DeformationCurve> curves;
    std::map<std::string, Matrix<Rational>> directions;
    std::vector<Expectation> expectations;

    const AlmostComplexStructure& structure(const std::string& key = "") const;
    const Form& form(const std::string& key) const;
    const DeformationCurve& curve(const std::string& key) const;
    const Matrix<Rational>& direction(const std::string& key) const;
};

const std::vector<ZooEntry>& zoo_catalog();
const ZooEntry& zoo_lookup(const std::string& name);

std::vector<ExpectationResult> run_expectations(const ZooEntry& entry);

} // namespace purefull
