#ifndef POSETEXT_ELEMENT_SET_HH
#define POSETEXT_ELEMENT_SET_HH

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <vector>

namespace posetext
{
    /// Dense index of a poset element, 0..n-1 in input order.
    using Element = std::size_t;

    inline constexpr Element no_element = std::numeric_limits<Element>::max();

    /**
     * A subset of the index range 0..universe-1 of some poset, stored as a
     * bitset. Sets with up to 64 elements in their universe stay inline.
     *
     * Binary operations require both operands to share a universe size.
     */
    class ElementSet
    {
        private:
            using Word = std::uint64_t;
            static constexpr std::size_t bits_per_word = 64;

            std::size_t _universe = 0;
            boost::container::small_vector<Word, 1> _words;

            auto trim() -> void
            {
                if (auto tail = _universe % bits_per_word ; tail != 0 && ! _words.empty())
                    _words.back() &= (Word{ 1 } << tail) - 1;
            }

        public:
            class const_iterator
            {
                private:
                    const ElementSet * _set = nullptr;
                    Element _at = no_element;

                public:
                    using iterator_category = std::forward_iterator_tag;
                    using value_type = Element;
                    using difference_type = std::ptrdiff_t;
                    using pointer = const Element *;
                    using reference = Element;

                    const_iterator() = default;
                    const_iterator(const ElementSet * s, Element at) : _set(s), _at(at) { }

                    auto operator* () const -> Element { return _at; }

                    auto operator++ () -> const_iterator &
                    {
                        _at = _set->next_after(_at);
                        return *this;
                    }

                    auto operator++ (int) -> const_iterator
                    {
                        auto r = *this;
                        ++*this;
                        return r;
                    }

                    auto operator== (const const_iterator & other) const -> bool { return _at == other._at; }
            };

            ElementSet() = default;

            explicit ElementSet(std::size_t universe) :
                _universe(universe),
                _words((universe + bits_per_word - 1) / bits_per_word, 0)
            {
            }

            ElementSet(std::size_t universe, std::initializer_list<Element> members) :
                ElementSet(universe)
            {
                for (auto m : members)
                    insert(m);
            }

            static auto full(std::size_t universe) -> ElementSet
            {
                ElementSet result(universe);
                for (auto & w : result._words)
                    w = ~Word{ 0 };
                result.trim();
                return result;
            }

            /// Builds a set from the low bits of a mask; universe must be at most 64.
            static auto from_mask(std::size_t universe, std::uint64_t mask) -> ElementSet
            {
                ElementSet result(universe);
                if (! result._words.empty())
                    result._words[0] = mask;
                result.trim();
                return result;
            }

            /// Low 64 bits of the set.
            auto mask() const -> std::uint64_t
            {
                return _words.empty() ? 0 : _words[0];
            }

            auto universe() const -> std::size_t { return _universe; }

            auto contains(Element e) const -> bool
            {
                return e < _universe && (_words[e / bits_per_word] >> (e % bits_per_word)) & 1;
            }

            auto insert(Element e) -> void
            {
                _words[e / bits_per_word] |= Word{ 1 } << (e % bits_per_word);
            }

            auto erase(Element e) -> void
            {
                _words[e / bits_per_word] &= ~(Word{ 1 } << (e % bits_per_word));
            }

            auto count() const -> std::size_t
            {
                std::size_t result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            auto empty() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return false;
                return true;
            }

            /// Smallest member, or no_element.
            auto first() const -> Element
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i])
                        return i * bits_per_word + std::countr_zero(_words[i]);
                return no_element;
            }

            /// Smallest member strictly greater than e, or no_element.
            auto next_after(Element e) const -> Element
            {
                auto start = e + 1;
                if (start >= _universe)
                    return no_element;
                auto wi = start / bits_per_word;
                auto w = _words[wi] & (~Word{ 0 } << (start % bits_per_word));
                while (true) {
                    if (w)
                        return wi * bits_per_word + std::countr_zero(w);
                    if (++wi >= _words.size())
                        return no_element;
                    w = _words[wi];
                }
            }

            auto begin() const -> const_iterator { return const_iterator{ this, first() }; }
            auto end() const -> const_iterator { return const_iterator{ this, no_element }; }

            auto members() const -> std::vector<Element>
            {
                return std::vector<Element>(begin(), end());
            }

            auto operator&= (const ElementSet & other) -> ElementSet &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= other._words[i];
                return *this;
            }

            auto operator|= (const ElementSet & other) -> ElementSet &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] |= other._words[i];
                return *this;
            }

            auto operator-= (const ElementSet & other) -> ElementSet &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= ~other._words[i];
                return *this;
            }

            friend auto operator& (ElementSet a, const ElementSet & b) -> ElementSet { return a &= b; }
            friend auto operator| (ElementSet a, const ElementSet & b) -> ElementSet { return a |= b; }
            friend auto operator- (ElementSet a, const ElementSet & b) -> ElementSet { return a -= b; }

            auto complement() const -> ElementSet
            {
                ElementSet result = *this;
                for (auto & w : result._words)
                    w = ~w;
                result.trim();
                return result;
            }

            auto is_subset_of(const ElementSet & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & ~other._words[i])
                        return false;
                return true;
            }

            auto intersects(const ElementSet & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & other._words[i])
                        return true;
                return false;
            }

            auto operator== (const ElementSet & other) const -> bool
            {
                return _universe == other._universe && std::equal(_words.begin(), _words.end(), other._words.begin());
            }

            /// Orders by universe, then by member list compared lexicographically.
            auto operator<=> (const ElementSet & other) const -> std::strong_ordering
            {
                if (auto c = _universe <=> other._universe ; c != 0)
                    return c;
                auto a = begin(), b = other.begin();
                for ( ; a != end() && b != other.end() ; ++a, ++b)
                    if (*a != *b)
                        return *a <=> *b;
                if (a == end() && b == other.end())
                    return std::strong_ordering::equal;
                return a == end() ? std::strong_ordering::less : std::strong_ordering::greater;
            }
    };
}

#endif
