#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace segsr {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;
using IndexList = std::vector<Index>;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NonIntegralDimensions : public Error { public: using Error::Error; };
class InvalidSegmentLength : public Error { public: using Error::Error; };
class InvalidSlide : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };
class IndexOutOfRange : public Error { public: using Error::Error; };
class MissingPreviousEstimate : public Error { public: using Error::Error; };
class RankDeficientSupport : public Error { public: using Error::Error; };
class NoProgress : public Error { public: using Error::Error; };
class TooLarge : public Error { public: using Error::Error; };
class MissingRipOrder : public Error { public: using Error::Error; };
class ZeroReference : public Error { public: using Error::Error; };
class RankDeficient : public Error { public: using Error::Error; };
class OrthogonalityViolated : public Error { public: using Error::Error; };
class ConfigParse : public Error { public: using Error::Error; };
class ConfigInvalid : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };
class MissingSeries : public Error { public: using Error::Error; };

} // namespace segsr
