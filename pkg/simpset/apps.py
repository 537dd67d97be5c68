from django.apps import AppConfig


class SimpSetConfig(AppConfig):
    name = "simpset"
    verbose_name = "Simplicial sets"
