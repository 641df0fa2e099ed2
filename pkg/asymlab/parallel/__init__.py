from .cache import ResultCache
from .runner import run_frames
from .work_generator import WorkGenerator

__all__ = ['ResultCache', 'WorkGenerator', 'run_frames']
