import logging
from BilliardsA2.conjecture.zeta import predict
from BilliardsA2.dataio.pkl import PKLDataset, write_pkl


logger = logging.getLogger(__name__)


def export_prediction(i_max, z_tilde, p, stream, partial=True, jobs=1):
    """Writes zeta_0, ..., zeta_(i_max) in the p-KL interchange format.

    Args:
        i_max: int >= 0.
        z_tilde: PointMultiset.
        p: int >= 2.
        stream: text stream the file is written to.
        partial: bool, whether Z~ comes from an incomplete Step-3
            strategy.
        jobs: int >= 1, number of worker processes.

    Returns:
        PKLDataset, the written prediction."""

    dataset = PKLDataset(p, predict(i_max, z_tilde, p, jobs), partial)
    write_pkl(dataset, stream)
    logger.info("Exported %d predicted elements for p=%d", i_max + 1, p)
    return dataset
