// Copyright (c) 2026 The vcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VC_LOG_H_
#define VC_LOG_H_

#include <sstream>
#include <string>

namespace vc {

enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

// Active level comes from the VCC_LOG_LEVEL environment variable
// (error|warn|info|debug); default is info.
LogLevel ActiveLogLevel();
void SetLogLevel(LogLevel level);

// Stream-style logger writing to stderr:  Log(LogLevel::kInfo) << "...";
class Log {
 public:
  explicit Log(LogLevel level) : level_(level) {}
  ~Log();

  template <typename T>
  Log& operator<<(const T& value) {
    stream_ << value;
    return *this;
  }

 private:
  LogLevel level_;
  std::ostringstream stream_;
};

}  // namespace vc

#endif  // VC_LOG_H_
