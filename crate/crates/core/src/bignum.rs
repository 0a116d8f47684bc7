use rug::Float;
pub fn touch(prec: u32) -> Float { Float::with_val(prec, 1) }
