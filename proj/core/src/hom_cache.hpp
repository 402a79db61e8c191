#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "acq/category.hpp"

namespace acq {

struct HomBasis;

struct HomCache {
  std::mutex mutex;
  std::map<std::pair<SimpleLabel, ObjectWord>, std::shared_ptr<const HomBasis>> bases;
};

}  // namespace acq
