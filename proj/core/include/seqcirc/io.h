#ifndef SEQCIRC_IO_H_
#define SEQCIRC_IO_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seqcirc {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Whole-file binary read and write. Both throw IoError.
std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace seqcirc

#endif  // SEQCIRC_IO_H_
