// Copyright 2026 The qjones Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qjones/format.hpp"

namespace qjones {

std::string to_string(const Rational& x) { return x.str(); }

std::string to_string(const GaussianRational& x) {
  if (x.im == 0) return x.re.str();
  std::string im;
  if (x.im == 1)
    im = "i";
  else if (x.im == -1)
    im = "-i";
  else
    im = x.im.str() + "*i";
  if (x.re == 0) return im;
  if (im[0] == '-') return x.re.str() + im;
  return x.re.str() + "+" + im;
}

}  // namespace qjones
