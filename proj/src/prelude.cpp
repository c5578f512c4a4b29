#include "lnlfpc/prelude.hpp"

namespace lnlfpc {

std::string_view preludeSource() {
    static constexpr std::string_view text = R"lnl(-- Standard prelude: base types, arithmetic and stream observers.

type Void = mu X. X;
type I = !(Void -o Void);
type Nat = mu X. I + X;
type ListNat = mu X. I + Nat * X;
type StreamNat = mu X. Nat * !X;

def star : I = lift \x : Void. x;

def zero : Nat = fold[Nat] left[I, Nat] star;

def succ : Nat -o Nat = \n : Nat. fold[Nat] right[I, Nat] n;

def add : Nat -o Nat -o Nat =
  rec a : !(Nat -o Nat -o Nat). \m : Nat. \n : Nat.
    case unfold m of {
      left u -> n
    | right m' -> succ ((force a) m' n)
    };

def mult : Nat -o Nat -o Nat =
  rec go : !(Nat -o Nat -o Nat). \m : Nat. \n : Nat.
    case unfold m of {
      left u -> zero
    | right m' -> add n ((force go) m' n)
    };

def fact : Nat -o Nat =
  rec fact : !(Nat -o Nat). \n : Nat.
    case unfold n of {
      left u -> succ zero
    | right n' -> mult n ((force fact) n')
    };

def const0 : StreamNat = rec s : !StreamNat. fold[StreamNat] <zero, s>;

def take : Nat -o StreamNat -o ListNat =
  rec t : !(Nat -o StreamNat -o ListNat). \k : Nat. \s : StreamNat.
    case unfold k of {
      left u -> fold[ListNat] left[I, Nat * ListNat] star
    | right k' -> let <h, rest> = unfold s in
        fold[ListNat] right[I, Nat * ListNat] <h, (force t) k' (force rest)>
    };

def head : StreamNat -o Nat = \s : StreamNat. let <h, rest> = unfold s in h;
)lnl";
    return text;
}

}  // namespace lnlfpc
