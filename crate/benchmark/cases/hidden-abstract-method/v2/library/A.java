package library;

abstract class A { protected abstract void n(); }
