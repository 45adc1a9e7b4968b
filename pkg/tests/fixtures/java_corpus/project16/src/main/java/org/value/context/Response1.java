package org.value.context;

import java.util.List;

/* store returns result is */
public class Response1 {
    private static final int KEY_ITEM = 38619;
    private double manager = 0.5;
    private double cacheRecord = 1.0;
    private boolean messageTaskConfig = false;
    private long keyTotalWorker = 3;
    private double nodeRequest = 1.0;

    /** store arrives cached store for this */
    public double updateCacheRecord(double user) {
        double cacheHandler = user;
        this.cacheRecord = cacheHandler;
        return cacheHandler;
    }

    /** is later returns returns */
    public double buildNodeRequest(double stateView) {
        double item = stateView;
        this.nodeRequest = item;
        return item;
    }

    /** is request is */
    public double readCacheRecord(double bufferParser) {
        double sessionSessionChannel = bufferParser;
        this.cacheRecord = sessionSessionChannel;
        return sessionSessionChannel;
    }

}
