use crate::code::{coset_leader_table, CodePair, CosetTable};
use crate::error::Result;
use crate::gf::F4;

/// Coset-leader lookup for a block code. Binary (CSS) pairs decode one
/// plane at a time with the same table.
#[derive(Debug, Clone)]
pub struct BlockLookupDecoder {
    table: CosetTable,
}

impl BlockLookupDecoder {
    pub fn new(pair: &CodePair) -> Result<BlockLookupDecoder> {
        Ok(BlockLookupDecoder {
            table: coset_leader_table(pair)?,
        })
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    pub fn decode(&self, syndrome: &[F4]) -> Result<Vec<F4>> {
        Ok(self.table.lookup(syndrome)?.to_vec())
    }

    /// Leader of the coset containing `e`.
    pub fn decode_error(&self, e: &[F4]) -> Result<Vec<F4>> {
        self.decode(&self.table.syndrome(e))
    }
}

pub fn decode_block_lookup(pair: &CodePair, syndrome: &[F4]) -> Result<Vec<F4>> {
    BlockLookupDecoder::new(pair)?.decode(syndrome)
}
