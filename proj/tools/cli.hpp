/*
   Copyright 2026 The u2split Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef U2SPLIT_TOOLS_CLI_HPP
#define U2SPLIT_TOOLS_CLI_HPP

#include <iosfwd>

namespace u2split::cli {

/// Exit codes.
enum Exit : int {
  kOk = 0,
  kNo = 1,
  kParse = 2,
  kInvalid = 3,
  kTransport = 4,
  kBudget = 5,
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace u2split::cli

#endif
