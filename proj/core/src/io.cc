#include "seqcirc/io.h"

#include <cerrno>
#include <cstring>
#include <fstream>

namespace seqcirc {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() +
                  "': " + std::strerror(errno));
  }
  std::string data;
  char buf[1 << 16];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    data.append(buf, static_cast<size_t>(in.gcount()));
  }
  if (in.bad()) throw IoError("cannot read '" + path.string() + "'");
  return data;
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot create '" + path.string() +
                  "': " + std::strerror(errno));
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw IoError("cannot write '" + path.string() + "'");
}

}  // namespace seqcirc
