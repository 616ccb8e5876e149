// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "aas/dir_lock.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include "util/error.hpp"
#include "util/fs_io.hpp"

namespace ovc::aas {

DirLock::DirLock(const std::filesystem::path& dir, Mode mode) {
  util::ensure_dir(dir);
  std::filesystem::path lock_path = dir / ".lock";
  fd_ = ::open(lock_path.c_str(), O_CREAT | O_RDWR | O_CLOEXEC, 0644);
  if (fd_ < 0) throw Error(Errc::io_failure, "cannot open lock file " + lock_path.string());
  int op = (mode == Mode::Exclusive ? LOCK_EX : LOCK_SH) | LOCK_NB;
  if (::flock(fd_, op) != 0) {
    ::close(fd_);
    fd_ = -1;
    throw Error(Errc::store_locked,
                "store '" + dir.string() + "' is locked by another process");
  }
}

DirLock::~DirLock() {
  if (fd_ >= 0) ::close(fd_);  // releases the flock
}

DirLock::DirLock(DirLock&& other) noexcept : fd_(other.fd_) { other.fd_ = -1; }

DirLock& DirLock::operator=(DirLock&& other) noexcept {
  if (this != &other) {
    if (fd_ >= 0) ::close(fd_);
    fd_ = other.fd_;
    other.fd_ = -1;
  }
  return *this;
}

}  // namespace ovc::aas
