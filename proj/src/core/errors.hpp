/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace sgnet {

// A requested generation exceeds a configured resource cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A word or index falls outside the requested generation.
class OutOfRange : public std::out_of_range {
 public:
  explicit OutOfRange(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace sgnet
