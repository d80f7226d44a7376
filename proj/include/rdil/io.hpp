#pragma once

#include <iosfwd>
#include <string>

#include "rdil/dataset.hpp"

namespace rdil {

enum class FileFormat { Arff, Csv };

struct LoadOptions {
  // CSV class column (0-based); -1 selects the last column. Ignored for ARFF,
  // where the class is the last declared attribute.
  int class_column = -1;
};

// ARFF subset: @relation, @attribute <name> numeric|{v1,...}, @data, '?' for
// missing, '%' comments, case-insensitive keywords. CSV: RFC-4180 quoting,
// header row required, attribute types inferred per column (numeric when every
// non-missing token parses as a number).
Dataset load_dataset(std::istream& in, FileFormat format, const LoadOptions& options = {});

// Format chosen by file extension unless given explicitly.
Dataset load_dataset_file(const std::string& path, const LoadOptions& options = {});
Dataset load_dataset_file(const std::string& path, FileFormat format,
                          const LoadOptions& options = {});

void save_dataset(std::ostream& out, const Dataset& d, FileFormat format);

}  // namespace rdil
