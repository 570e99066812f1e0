#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace detpred::features {

enum class ModalityTag { Step, HR, Sleep };
const char* modality_tag_name(ModalityTag t);

struct CatalogEntry {
    std::string name;
    ModalityTag tag;
    std::string definition;  // short computation label, consumed by the ablations
};

// The fixed, ordered feature catalog shared by extraction, export and the
// evaluation harness. Names are unique; modality tags drive the ablations.
const std::vector<CatalogEntry>& feature_catalog();
std::size_t catalog_size();
std::size_t catalog_index(const std::string& name);  // throws on unknown name

// One example's features in catalog order. Missing entries hold NaN until
// imputation fills them; the mask records which entries were originally
// missing and is preserved across imputation for provenance.
struct FeatureVector {
    std::string example_id;
    std::vector<double> values;
    std::vector<bool> missing;

    FeatureVector() = default;
    explicit FeatureVector(std::string id);
    void set(std::size_t index, double value);
    void set_missing(std::size_t index);
};

std::string catalog_manifest_json();

}  // namespace detpred::features
