// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace plm::detail {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

} // namespace plm::detail
