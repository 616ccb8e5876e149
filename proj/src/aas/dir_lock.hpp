// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

namespace ovc::aas {

// Cross-process single-writer coordination on a store directory via
// flock(2) on <dir>/.lock. Writers take the exclusive lock, readers the
// shared one; the lock dies with the process.
class DirLock {
 public:
  enum class Mode { Shared, Exclusive };

  // Throws Error(store_locked) when the lock is held elsewhere,
  // Error(io_failure) when the lock file cannot be created.
  DirLock(const std::filesystem::path& dir, Mode mode);
  ~DirLock();

  DirLock(DirLock&& other) noexcept;
  DirLock& operator=(DirLock&& other) noexcept;
  DirLock(const DirLock&) = delete;
  DirLock& operator=(const DirLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace ovc::aas
