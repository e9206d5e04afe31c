#pragma once

#include <stdexcept>
#include <string>

namespace mshuff {

// Root of everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid value for an operation (zero multiset where a non-zero one is
// required, k = 0 thickening, negative entropy inputs, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed text input (symbols, multisets, counts files, inline lists).
class ParseError : public Error {
public:
    using Error::Error;
};

// join() of trees whose root multisets share support.
class DisjointnessError : public Error {
public:
    using Error::Error;
};

// depth_of()/attach() target multiset is not a leaf of the tree.
class NotALeafError : public Error {
public:
    using Error::Error;
};

// code_table() on a tree with a non-monomial leaf.
class NotMonomialError : public Error {
public:
    using Error::Error;
};

// An enumeration or product-size guard was exceeded.
class TooLargeError : public Error {
public:
    using Error::Error;
};

// check_law() with an id that is not registered.
class UnknownLawError : public Error {
public:
    using Error::Error;
};

// Anything wrong with an encoded stream or container.
class CodecError : public Error {
public:
    using Error::Error;
};

class UnknownSymbolError : public CodecError {
public:
    using CodecError::CodecError;
};

class TruncatedStreamError : public CodecError {
public:
    using CodecError::CodecError;
};

class InvalidCodewordError : public CodecError {
public:
    using CodecError::CodecError;
};

} // namespace mshuff
